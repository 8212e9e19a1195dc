// Copyright (c) 2026 chi4 contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "chi4/qstate.hpp"
#include "chi4/rng.hpp"
#include "chi4/types.hpp"

namespace chi4 {

// Pauli label in {0,1,2,3}; 0 is the identity.
struct PauliIndex {
  int value;

  explicit PauliIndex(int v) : value(v) {
    if (v < 0 || v > 3) throw DomainError("Pauli index must be in 0..3");
  }
};

// Angles for the two parametrized two-qubit bases.  All four angles lie
// strictly inside (0, pi/2) and the two theta (resp. phi) values differ by
// at least kAngleGap.
struct BasisParams {
  double theta1;
  double theta2;
  double phi1;
  double phi2;

  void validate() const;
};

// The parameter point where both angle differences equal pi/4.
BasisParams chi_point();

// Uniformly random valid parameters; rejects draws violating the gap rule.
BasisParams random_basis_params(Rng& rng);
// Random valid parameters constrained to theta1-theta2 == phi1-phi2, the
// slice on which the closed-form entropy of the A3B2 reduction holds.
BasisParams random_equal_gap_params(Rng& rng);
// Equal-gap parameters with both differences equal to delta in (0, pi/2).
BasisParams equal_gap_params(double delta);

// Ordered orthonormal family over a common label set.  May span only a
// subspace; complete() distinguishes the two cases.
class OrthonormalBasis {
 public:
  OrthonormalBasis(std::string name, std::vector<StateVector> states);

  const std::string& name() const { return name_; }
  const std::vector<StateVector>& states() const { return states_; }
  const StateVector& state(size_t k) const { return states_.at(k); }
  const std::vector<std::string>& labels() const { return states_.front().labels(); }
  size_t size() const { return states_.size(); }
  size_t dim() const { return states_.front().dim(); }
  bool complete() const { return states_.size() == dim(); }

 private:
  std::string name_;
  std::vector<StateVector> states_;
};

LocalOperator pauli_operator(PauliIndex i);

// The four Bell states (sigma^i on the first qubit of (|00>+|11>)/sqrt(2)).
OrthonormalBasis bell_basis(const std::string& l0 = "A1", const std::string& l1 = "A2");

enum class BasisKind { kJ, kJprime };

// The theta/phi two-qubit basis family; kJprime swaps the sine and cosine
// weights of members 1 and 2 relative to kJ.
OrthonormalBasis parametrized_two_qubit_basis(BasisKind kind, double theta, double phi,
                                              const std::string& l0 = "q0",
                                              const std::string& l1 = "q1");

// Four-qubit channel on A3A4B1B2: (1/2) sum_J |J> (x) |J'>.
StateVector chi_bar_state(const BasisParams& p);
// The maximal channel, amplitudes 0 or +-1/(2*sqrt(2)) written literally;
// equals chi_bar_state(chi_point()) up to rounding.
StateVector chi_state();

// 16 members (sigma^i on A3)(sigma^j on A4) chi_state, index 4*i+j.
OrthonormalBasis chi_basis();
// 16 members on A1A2A3A4 from (1/2) sum_K |K'>_{A1A2} (x) |K>_{A3A4}.
OrthonormalBasis pi_bar_basis(const BasisParams& p);
// 16 members on A1A2A3B2; member (0,0) has the fixed +-1/(2*sqrt(2)) pattern.
OrthonormalBasis pi_basis_on_A1A2A3B2();
// 8 members (sigma^{0 or 3} on A3)(sigma^j on B2) chi_state; spans half the
// 16-dimensional space.
OrthonormalBasis subspace_basis_8();

// One member per computational bit pattern of the given register.
OrthonormalBasis computational_basis(std::vector<std::string> labels);

enum class ReferenceKind { kGhz4, kW4, kBellPairProduct };

// Comparison channels on A3A4B1B2.
StateVector reference_state(ReferenceKind kind);

}  // namespace chi4
