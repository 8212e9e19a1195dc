// Copyright (c) 2026 chi4 contributors
// SPDX-License-Identifier: Apache-2.0

#include "chi4/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>

#include "chi4/hermitian.hpp"
#include "chi4/kernels.hpp"

namespace chi4 {

namespace {

constexpr size_t kMaxQubits = 6;

void check_labels(const std::vector<std::string>& labels) {
  if (labels.empty() || labels.size() > kMaxQubits) {
    throw DomainError("register must have 1 to 6 qubits");
  }
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (l.empty()) throw DomainError("qubit label must be non-empty");
    if (!seen.insert(l).second) throw LabelCollision("duplicate qubit label: " + l);
  }
}

size_t bit_of(size_t index, size_t n, size_t pos) { return (index >> (n - 1 - pos)) & 1u; }

// Inserts subindex bits at the given register positions (both MSB-first).
size_t scatter_bits(size_t base, const std::vector<size_t>& positions, size_t n, size_t sub) {
  size_t out = base;
  const size_t k = positions.size();
  for (size_t t = 0; t < k; ++t) {
    const size_t bit = (sub >> (k - 1 - t)) & 1u;
    out |= bit << (n - 1 - positions[t]);
  }
  return out;
}

}  // namespace

StateVector::StateVector(std::vector<std::string> labels, std::vector<cplx> amplitudes) {
  check_labels(labels);
  if (amplitudes.size() != (size_t{1} << labels.size())) {
    throw DimensionMismatch("amplitude count does not match register size");
  }
  labels_ = std::move(labels);
  amps_ = std::move(amplitudes);
  if (std::abs(norm() - 1.0) > tol::kInvariant) {
    throw DomainError("state vector is not normalized");
  }
}

StateVector StateVector::from_amplitudes(std::vector<std::string> labels,
                                         std::vector<cplx> amplitudes) {
  check_labels(labels);
  if (amplitudes.size() != (size_t{1} << labels.size())) {
    throw DimensionMismatch("amplitude count does not match register size");
  }
  const double n2 = kernels::active().norm_sq(amplitudes.data(), amplitudes.size());
  if (n2 <= tol::kZeroProbability) {
    throw DomainError("cannot normalize a zero vector");
  }
  kernels::active().cscale(1.0 / std::sqrt(n2), amplitudes.data(), amplitudes.size());
  StateVector s;
  s.labels_ = std::move(labels);
  s.amps_ = std::move(amplitudes);
  return s;
}

StateVector StateVector::basis_state(std::vector<std::string> labels, size_t index) {
  const size_t dim = size_t{1} << labels.size();
  if (index >= dim) throw DomainError("basis state index out of range");
  std::vector<cplx> amps(dim, cplx{0.0, 0.0});
  amps[index] = 1.0;
  return StateVector(std::move(labels), std::move(amps));
}

cplx StateVector::amplitude(size_t index) const {
  if (index >= amps_.size()) throw DomainError("amplitude index out of range");
  return amps_[index];
}

double StateVector::norm() const {
  return std::sqrt(kernels::active().norm_sq(amps_.data(), amps_.size()));
}

StateVector StateVector::relabeled(std::vector<std::string> new_labels) const {
  check_labels(new_labels);
  if (new_labels.size() != labels_.size()) {
    throw DimensionMismatch("relabeling must preserve register size");
  }
  StateVector s;
  s.labels_ = std::move(new_labels);
  s.amps_ = amps_;
  return s;
}

StateVector StateVector::reordered(const std::vector<std::string>& new_order) const {
  const std::vector<size_t> old_pos = label_positions(labels_, new_order);
  if (new_order.size() != labels_.size()) {
    throw LabelMismatch("reordering must use the full label set");
  }
  const size_t n = labels_.size();
  std::vector<cplx> out(amps_.size());
  for (size_t i = 0; i < amps_.size(); ++i) {
    size_t j = 0;
    for (size_t p = 0; p < n; ++p) {
      j |= bit_of(i, n, old_pos[p]) << (n - 1 - p);
    }
    out[j] = amps_[i];
  }
  StateVector s;
  s.labels_ = new_order;
  s.amps_ = std::move(out);
  return s;
}

DensityOperator StateVector::density() const {
  CMatrix m(dim(), dim());
  kernels::active().rank1_accum(cplx{1.0, 0.0}, amps_.data(), m.data.data(), dim());
  return DensityOperator(labels_, std::move(m));
}

DensityOperator::DensityOperator(std::vector<std::string> labels, CMatrix matrix) {
  check_labels(labels);
  if (!matrix.is_square() || matrix.rows != (size_t{1} << labels.size())) {
    throw DimensionMismatch("density matrix does not match register size");
  }
  if (matrix.hermiticity_defect() > tol::kInvariant) {
    throw DomainError("density matrix is not Hermitian");
  }
  if (std::abs(matrix.trace() - cplx{1.0, 0.0}) > tol::kInvariant) {
    throw DomainError("density matrix does not have unit trace");
  }
  labels_ = std::move(labels);
  matrix_ = std::move(matrix);
  const std::vector<double> eigs = hermitian_eigenvalues(matrix_);
  if (eigs.front() < -tol::kInvariant) {
    throw DomainError("density matrix is not positive semidefinite");
  }
}

std::vector<double> DensityOperator::eigenvalues() const { return hermitian_eigenvalues(matrix_); }

LocalOperator::LocalOperator(CMatrix matrix, bool is_gate)
    : matrix_(std::move(matrix)), is_gate_(is_gate) {
  if (!matrix_.is_square() || matrix_.rows < 2 || (matrix_.rows & (matrix_.rows - 1)) != 0) {
    throw DimensionMismatch("operator matrix must be square with power-of-two size");
  }
  arity_ = 0;
  for (size_t d = matrix_.rows; d > 1; d >>= 1) ++arity_;
  if (is_gate_) {
    const CMatrix product = matrix_.dagger() * matrix_;
    if (product.max_abs_diff(CMatrix::identity(matrix_.rows)) > tol::kInvariant) {
      throw DomainError("gate operator is not unitary");
    }
  }
}

LocalOperator LocalOperator::gate(CMatrix matrix) { return LocalOperator(std::move(matrix), true); }

LocalOperator LocalOperator::general(CMatrix matrix) {
  return LocalOperator(std::move(matrix), false);
}

StateVector tensor_product(const StateVector& a, const StateVector& b) {
  std::vector<std::string> labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  check_labels(labels);
  const size_t db = b.dim();
  std::vector<cplx> amps(a.dim() * db, cplx{0.0, 0.0});
  for (size_t ia = 0; ia < a.dim(); ++ia) {
    kernels::active().caxpy(a.amplitude(ia), b.amplitudes().data(), amps.data() + ia * db, db);
  }
  return StateVector(std::move(labels), std::move(amps));
}

StateVector apply_local_operator(const LocalOperator& op, const std::vector<std::string>& targets,
                                 const StateVector& state) {
  if (targets.size() != op.arity()) {
    throw DimensionMismatch("operator arity does not match target count");
  }
  const std::vector<size_t> pos = label_positions(state.labels(), targets);
  const size_t n = state.n_qubits();
  const size_t dk = size_t{1} << op.arity();
  size_t target_mask = 0;
  for (size_t p : pos) target_mask |= size_t{1} << (n - 1 - p);

  std::vector<cplx> amps = state.amplitudes();
  std::vector<cplx> in(dk), out(dk);
  for (size_t rest = 0; rest < state.dim(); ++rest) {
    if ((rest & target_mask) != 0) continue;
    for (size_t m = 0; m < dk; ++m) in[m] = amps[scatter_bits(rest, pos, n, m)];
    for (size_t r = 0; r < dk; ++r) {
      cplx acc{0.0, 0.0};
      for (size_t c = 0; c < dk; ++c) acc += op.matrix().at(r, c) * in[c];
      out[r] = acc;
    }
    for (size_t m = 0; m < dk; ++m) amps[scatter_bits(rest, pos, n, m)] = out[m];
  }
  if (op.is_gate()) return StateVector(state.labels(), std::move(amps));
  return StateVector::from_amplitudes(state.labels(), std::move(amps));
}

namespace {

// Splits labels into kept and traced positions, preserving original order.
std::pair<std::vector<size_t>, std::vector<size_t>> split_positions(
    const std::vector<std::string>& labels, const std::vector<std::string>& keep) {
  const std::vector<size_t> keep_pos_unsorted = label_positions(labels, keep);
  if (keep.empty() || keep.size() >= labels.size()) {
    throw DomainError("kept subset must be a nonempty proper subset of the register");
  }
  std::set<size_t> keep_set(keep_pos_unsorted.begin(), keep_pos_unsorted.end());
  std::vector<size_t> keep_pos(keep_set.begin(), keep_set.end());
  std::vector<size_t> rest_pos;
  for (size_t p = 0; p < labels.size(); ++p) {
    if (!keep_set.count(p)) rest_pos.push_back(p);
  }
  return {keep_pos, rest_pos};
}

}  // namespace

DensityOperator partial_trace(const DensityOperator& rho, const std::vector<std::string>& keep) {
  const auto [keep_pos, rest_pos] = split_positions(rho.labels(), keep);
  const size_t n = rho.n_qubits();
  const size_t dk = size_t{1} << keep_pos.size();
  const size_t dr = size_t{1} << rest_pos.size();

  CMatrix out(dk, dk);
  for (size_t i = 0; i < dk; ++i) {
    for (size_t j = 0; j < dk; ++j) {
      cplx acc{0.0, 0.0};
      for (size_t t = 0; t < dr; ++t) {
        const size_t row = scatter_bits(scatter_bits(0, keep_pos, n, i), rest_pos, n, t);
        const size_t col = scatter_bits(scatter_bits(0, keep_pos, n, j), rest_pos, n, t);
        acc += rho.matrix().at(row, col);
      }
      out.at(i, j) = acc;
    }
  }
  std::vector<std::string> out_labels;
  for (size_t p : keep_pos) out_labels.push_back(rho.labels()[p]);
  return DensityOperator(std::move(out_labels), std::move(out));
}

DensityOperator partial_trace(const StateVector& state, const std::vector<std::string>& keep) {
  return partial_trace(state.density(), keep);
}

CMatrix partial_transpose(const DensityOperator& rho, const std::vector<std::string>& transposed) {
  const std::vector<size_t> pos = label_positions(rho.labels(), transposed);
  if (transposed.empty() || transposed.size() >= rho.n_qubits()) {
    throw DomainError("transposed subset must be a nonempty proper subset of the register");
  }
  const size_t n = rho.n_qubits();
  size_t mask = 0;
  for (size_t p : pos) mask |= size_t{1} << (n - 1 - p);

  const size_t dim = rho.dim();
  CMatrix out(dim, dim);
  for (size_t i = 0; i < dim; ++i) {
    for (size_t j = 0; j < dim; ++j) {
      const size_t row = (i & ~mask) | (j & mask);
      const size_t col = (j & ~mask) | (i & mask);
      out.at(i, j) = rho.matrix().at(row, col);
    }
  }
  return out;
}

cplx inner_product(const StateVector& a, const StateVector& b) {
  if (a.labels() == b.labels()) {
    return kernels::active().cdot(a.amplitudes().data(), b.amplitudes().data(), a.dim());
  }
  const StateVector br = b.reordered(a.labels());
  return kernels::active().cdot(a.amplitudes().data(), br.amplitudes().data(), a.dim());
}

double fidelity(const StateVector& a, const StateVector& b) {
  return std::norm(inner_product(a, b));
}

std::vector<size_t> label_positions(const std::vector<std::string>& labels,
                                    const std::vector<std::string>& subset) {
  std::set<std::string> seen;
  std::vector<size_t> pos;
  pos.reserve(subset.size());
  for (const auto& l : subset) {
    if (!seen.insert(l).second) throw LabelCollision("duplicate label in subset: " + l);
    const auto it = std::find(labels.begin(), labels.end(), l);
    if (it == labels.end()) throw LabelMismatch("label not in register: " + l);
    pos.push_back(static_cast<size_t>(it - labels.begin()));
  }
  return pos;
}

}  // namespace chi4
