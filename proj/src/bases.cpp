// Copyright (c) 2026 chi4 contributors
// SPDX-License-Identifier: Apache-2.0

#include "chi4/bases.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "chi4/kernels.hpp"

namespace chi4 {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

std::string with_labels(const std::string& base, const std::vector<std::string>& labels) {
  std::string out = base + "(";
  for (size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ",";
    out += labels[i];
  }
  return out + ")";
}

void check_open_interval(double angle, const char* what) {
  if (!(angle > 0.0 && angle < kHalfPi)) {
    throw DomainError(std::string(what) + " must lie strictly inside (0, pi/2)");
  }
}

}  // namespace

void BasisParams::validate() const {
  check_open_interval(theta1, "theta1");
  check_open_interval(theta2, "theta2");
  check_open_interval(phi1, "phi1");
  check_open_interval(phi2, "phi2");
  if (std::abs(theta1 - theta2) < tol::kAngleGap) {
    throw DomainError("theta1 and theta2 must differ");
  }
  if (std::abs(phi1 - phi2) < tol::kAngleGap) {
    throw DomainError("phi1 and phi2 must differ");
  }
}

BasisParams chi_point() {
  return BasisParams{3.0 * std::numbers::pi / 8.0, std::numbers::pi / 8.0,
                     3.0 * std::numbers::pi / 8.0, std::numbers::pi / 8.0};
}

BasisParams random_basis_params(Rng& rng) {
  // Margins keep draws comfortably inside the open domain and gap rule.
  constexpr double kMargin = 0.05;
  const double lo = kMargin;
  const double span = kHalfPi - 2.0 * kMargin;
  for (;;) {
    BasisParams p{lo + span * rng.uniform01(), lo + span * rng.uniform01(),
                  lo + span * rng.uniform01(), lo + span * rng.uniform01()};
    if (std::abs(p.theta1 - p.theta2) < kMargin) continue;
    if (std::abs(p.phi1 - p.phi2) < kMargin) continue;
    p.validate();
    return p;
  }
}

BasisParams random_equal_gap_params(Rng& rng) {
  constexpr double kMargin = 0.05;
  const double delta = kMargin + (kHalfPi - 2.0 * kMargin) * rng.uniform01();
  const double base_span = kHalfPi - delta - kMargin;
  const double theta2 = 0.5 * kMargin + base_span * rng.uniform01();
  const double phi2 = 0.5 * kMargin + base_span * rng.uniform01();
  BasisParams p{theta2 + delta, theta2, phi2 + delta, phi2};
  p.validate();
  return p;
}

BasisParams equal_gap_params(double delta) {
  if (!(delta > 0.0 && delta < kHalfPi)) {
    throw DomainError("difference must lie strictly inside (0, pi/2)");
  }
  const double low = 0.5 * (kHalfPi - delta);
  BasisParams p{low + delta, low, low + delta, low};
  p.validate();
  return p;
}

OrthonormalBasis::OrthonormalBasis(std::string name, std::vector<StateVector> states)
    : name_(std::move(name)), states_(std::move(states)) {
  if (states_.empty()) throw DomainError("basis must have at least one member");
  const auto& labels = states_.front().labels();
  for (const auto& s : states_) {
    if (s.labels() != labels) throw LabelMismatch("basis members must share one label set");
  }
  if (states_.size() > dim()) throw DimensionMismatch("more basis members than dimensions");
  for (size_t m = 0; m < states_.size(); ++m) {
    for (size_t n = m; n < states_.size(); ++n) {
      const cplx g = inner_product(states_[m], states_[n]);
      const cplx expected = (m == n) ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
      if (std::abs(g - expected) > tol::kInvariant) {
        throw DomainError("basis members are not orthonormal");
      }
    }
  }
}

LocalOperator pauli_operator(PauliIndex i) {
  CMatrix m(2, 2);
  switch (i.value) {
    case 0:
      m.at(0, 0) = 1.0;
      m.at(1, 1) = 1.0;
      break;
    case 1:
      m.at(0, 1) = 1.0;
      m.at(1, 0) = 1.0;
      break;
    case 2:
      m.at(0, 1) = cplx{0.0, -1.0};
      m.at(1, 0) = cplx{0.0, 1.0};
      break;
    default:
      m.at(0, 0) = 1.0;
      m.at(1, 1) = -1.0;
      break;
  }
  return LocalOperator::gate(std::move(m));
}

OrthonormalBasis bell_basis(const std::string& l0, const std::string& l1) {
  const double r = 1.0 / std::sqrt(2.0);
  const StateVector psi0({l0, l1}, {r, 0.0, 0.0, r});
  std::vector<StateVector> members;
  members.reserve(4);
  for (int i = 0; i < 4; ++i) {
    members.push_back(apply_local_operator(pauli_operator(PauliIndex(i)), {l0}, psi0));
  }
  return OrthonormalBasis(with_labels("bell", {l0, l1}), std::move(members));
}

OrthonormalBasis parametrized_two_qubit_basis(BasisKind kind, double theta, double phi,
                                              const std::string& l0, const std::string& l1) {
  check_open_interval(theta, "theta");
  check_open_interval(phi, "phi");
  const double ct = std::cos(theta), st = std::sin(theta);
  const double cp = std::cos(phi), sp = std::sin(phi);
  const std::vector<std::string> labels{l0, l1};
  std::vector<StateVector> members;
  members.reserve(4);
  members.emplace_back(labels, std::vector<cplx>{ct, 0.0, 0.0, st});
  if (kind == BasisKind::kJ) {
    members.emplace_back(labels, std::vector<cplx>{0.0, cp, sp, 0.0});
    members.emplace_back(labels, std::vector<cplx>{0.0, -sp, cp, 0.0});
  } else {
    members.emplace_back(labels, std::vector<cplx>{0.0, sp, cp, 0.0});
    members.emplace_back(labels, std::vector<cplx>{0.0, cp, -sp, 0.0});
  }
  members.emplace_back(labels, std::vector<cplx>{-st, 0.0, 0.0, ct});
  const char* base = (kind == BasisKind::kJ) ? "J" : "Jprime";
  return OrthonormalBasis(with_labels(base, labels), std::move(members));
}

namespace {

// (1/2) sum_k |left_k> (x) |right_k> for two four-member bases.
StateVector half_sum_of_products(const OrthonormalBasis& left, const OrthonormalBasis& right) {
  std::vector<std::string> labels = left.labels();
  labels.insert(labels.end(), right.labels().begin(), right.labels().end());
  std::vector<cplx> acc(16, cplx{0.0, 0.0});
  for (size_t k = 0; k < 4; ++k) {
    const StateVector term = tensor_product(left.state(k), right.state(k));
    kernels::active().caxpy(cplx{0.5, 0.0}, term.amplitudes().data(), acc.data(), acc.size());
  }
  return StateVector(std::move(labels), std::move(acc));
}

std::vector<StateVector> pauli_pair_family(const StateVector& seed, const std::string& first,
                                           const std::string& second) {
  std::vector<StateVector> members;
  members.reserve(16);
  for (int i = 0; i < 4; ++i) {
    const StateVector si = apply_local_operator(pauli_operator(PauliIndex(i)), {first}, seed);
    for (int j = 0; j < 4; ++j) {
      members.push_back(apply_local_operator(pauli_operator(PauliIndex(j)), {second}, si));
    }
  }
  return members;
}

}  // namespace

StateVector chi_bar_state(const BasisParams& p) {
  p.validate();
  const OrthonormalBasis j = parametrized_two_qubit_basis(BasisKind::kJ, p.theta1, p.phi1, "A3", "A4");
  const OrthonormalBasis jp =
      parametrized_two_qubit_basis(BasisKind::kJprime, p.theta2, p.phi2, "B1", "B2");
  return half_sum_of_products(j, jp);
}

StateVector chi_state() {
  // Written directly from its eight nonzero amplitudes so the pattern is
  // bit-exact; chi_bar_state(chi_point()) reproduces it only to rounding.
  const double a = 1.0 / (2.0 * std::sqrt(2.0));
  std::vector<cplx> amps(16, cplx{0.0, 0.0});
  amps[0b0000] = a;
  amps[0b0011] = -a;
  amps[0b0101] = -a;
  amps[0b0110] = a;
  amps[0b1001] = a;
  amps[0b1010] = a;
  amps[0b1100] = a;
  amps[0b1111] = a;
  return StateVector({"A3", "A4", "B1", "B2"}, std::move(amps));
}

OrthonormalBasis chi_basis() {
  return OrthonormalBasis(with_labels("chi", {"A3", "A4", "B1", "B2"}),
                          pauli_pair_family(chi_state(), "A3", "A4"));
}

OrthonormalBasis pi_bar_basis(const BasisParams& p) {
  p.validate();
  const OrthonormalBasis kp =
      parametrized_two_qubit_basis(BasisKind::kJprime, p.theta2, p.phi2, "A1", "A2");
  const OrthonormalBasis k = parametrized_two_qubit_basis(BasisKind::kJ, p.theta1, p.phi1, "A3", "A4");
  const StateVector seed = half_sum_of_products(kp, k);
  return OrthonormalBasis(with_labels("pi_bar", seed.labels()),
                          pauli_pair_family(seed, "A1", "A2"));
}

OrthonormalBasis pi_basis_on_A1A2A3B2() {
  const double r = 1.0 / (2.0 * std::sqrt(2.0));
  std::vector<cplx> amps(16, cplx{0.0, 0.0});
  amps[0b0000] = r;
  amps[0b0011] = r;
  amps[0b0101] = -r;
  amps[0b0110] = r;
  amps[0b1001] = r;
  amps[0b1010] = r;
  amps[0b1100] = -r;
  amps[0b1111] = r;
  const StateVector seed({"A1", "A2", "A3", "B2"}, std::move(amps));
  return OrthonormalBasis(with_labels("pi", seed.labels()), pauli_pair_family(seed, "A1", "A2"));
}

OrthonormalBasis subspace_basis_8() {
  const StateVector chi = chi_state();
  std::vector<StateVector> members;
  members.reserve(8);
  for (int a : {0, 3}) {
    const StateVector sa = apply_local_operator(pauli_operator(PauliIndex(a)), {"A3"}, chi);
    for (int j = 0; j < 4; ++j) {
      members.push_back(apply_local_operator(pauli_operator(PauliIndex(j)), {"B2"}, sa));
    }
  }
  return OrthonormalBasis(with_labels("subspace8", chi.labels()), std::move(members));
}

OrthonormalBasis computational_basis(std::vector<std::string> labels) {
  const size_t dim = size_t{1} << labels.size();
  std::vector<StateVector> members;
  members.reserve(dim);
  for (size_t k = 0; k < dim; ++k) members.push_back(StateVector::basis_state(labels, k));
  return OrthonormalBasis(with_labels("computational", labels), std::move(members));
}

StateVector reference_state(ReferenceKind kind) {
  const std::vector<std::string> labels{"A3", "A4", "B1", "B2"};
  std::vector<cplx> amps(16, cplx{0.0, 0.0});
  switch (kind) {
    case ReferenceKind::kGhz4: {
      const double r = 1.0 / std::sqrt(2.0);
      amps[0b0000] = r;
      amps[0b1111] = r;
      break;
    }
    case ReferenceKind::kW4:
      amps[0b0001] = 0.5;
      amps[0b0010] = 0.5;
      amps[0b0100] = 0.5;
      amps[0b1000] = 0.5;
      break;
    case ReferenceKind::kBellPairProduct:
      amps[0b0000] = 0.5;
      amps[0b0101] = 0.5;
      amps[0b1010] = 0.5;
      amps[0b1111] = 0.5;
      break;
  }
  return StateVector(labels, std::move(amps));
}

}  // namespace chi4
