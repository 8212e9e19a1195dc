// Copyright (c) 2026 chi4 contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "chi4/types.hpp"

namespace chi4 {

class DensityOperator;

// Pure state on a register of named qubits.  Labels are MSB-first: the
// leftmost label owns the most significant bit of the amplitude index.
class StateVector {
 public:
  StateVector(std::vector<std::string> labels, std::vector<cplx> amplitudes);

  // Normalizing constructor for amplitude lists assembled term by term.
  static StateVector from_amplitudes(std::vector<std::string> labels,
                                     std::vector<cplx> amplitudes);
  static StateVector basis_state(std::vector<std::string> labels, size_t index);

  const std::vector<std::string>& labels() const { return labels_; }
  size_t n_qubits() const { return labels_.size(); }
  size_t dim() const { return amps_.size(); }
  const std::vector<cplx>& amplitudes() const { return amps_; }
  cplx amplitude(size_t index) const;
  double norm() const;

  // Renames qubits in place; order and amplitudes are unchanged.
  StateVector relabeled(std::vector<std::string> new_labels) const;
  // Permutes the register so labels appear in new_order.
  StateVector reordered(const std::vector<std::string>& new_order) const;
  DensityOperator density() const;

 private:
  StateVector() = default;
  std::vector<std::string> labels_;
  std::vector<cplx> amps_;
};

// Validated density operator: Hermitian, unit trace, positive semidefinite
// within tol::kInvariant.
class DensityOperator {
 public:
  DensityOperator(std::vector<std::string> labels, CMatrix matrix);

  const std::vector<std::string>& labels() const { return labels_; }
  size_t n_qubits() const { return labels_.size(); }
  size_t dim() const { return matrix_.rows; }
  const CMatrix& matrix() const { return matrix_; }
  std::vector<double> eigenvalues() const;

 private:
  std::vector<std::string> labels_;
  CMatrix matrix_;
};

// Operator acting on `arity` qubits of a register; the qubits are named at
// application time.  Gates are checked for unitarity, general operators not.
class LocalOperator {
 public:
  static LocalOperator gate(CMatrix matrix);
  static LocalOperator general(CMatrix matrix);

  size_t arity() const { return arity_; }
  const CMatrix& matrix() const { return matrix_; }
  bool is_gate() const { return is_gate_; }

 private:
  LocalOperator(CMatrix matrix, bool is_gate);
  size_t arity_;
  CMatrix matrix_;
  bool is_gate_;
};

StateVector tensor_product(const StateVector& a, const StateVector& b);
StateVector apply_local_operator(const LocalOperator& op, const std::vector<std::string>& targets,
                                 const StateVector& state);

// Reduced state on `keep`, which must be a nonempty proper subset of the
// labels.  Result labels keep their original relative order.
DensityOperator partial_trace(const DensityOperator& rho, const std::vector<std::string>& keep);
DensityOperator partial_trace(const StateVector& state, const std::vector<std::string>& keep);

// Transpose over a nonempty proper subset of the labels.  The result is
// Hermitian but in general not positive, so it is returned as a raw matrix.
CMatrix partial_transpose(const DensityOperator& rho, const std::vector<std::string>& transposed);

// <a|b>; label sets must agree, order may differ.
cplx inner_product(const StateVector& a, const StateVector& b);
double fidelity(const StateVector& a, const StateVector& b);

// Positions of `subset` inside `labels`, in subset order.
std::vector<size_t> label_positions(const std::vector<std::string>& labels,
                                    const std::vector<std::string>& subset);

}  // namespace chi4
