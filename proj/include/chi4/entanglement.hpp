// Copyright (c) 2026 chi4 contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "chi4/qstate.hpp"

namespace chi4 {

// Diagnostics for one split of a register.  entropy_bits is the von Neumann
// entropy of the left reduction; negativity is computed across the split by
// transposing the left side.
struct BipartitionReport {
  std::vector<std::string> left;
  std::vector<std::string> right;
  double entropy_bits = 0.0;
  double negativity = 0.0;
};

// Pairwise negativity of the two-qubit remainder after a second particle is
// lost from an already reduced three-qubit state.
struct SecondLossEntry {
  std::string second_lost;
  std::string left;
  std::string right;
  double negativity = 0.0;
};

// Diagnostics after tracing out one particle of a four-qubit state.
struct LossEntry {
  std::string lost;
  std::vector<std::pair<std::string, double>> single_qubit_entropies;
  std::vector<BipartitionReport> splits;  // each remaining qubit vs the other two
  std::vector<SecondLossEntry> second_losses;
};

// -sum lambda log2 lambda over eigenvalues above tol::kEntropyCutoff.
double von_neumann_entropy(const DensityOperator& rho);

// Binary entropy -p log2 p - (1-p) log2 (1-p) in bits.
double binary_entropy_bits(double p);

// (||rho^{T_side}||_1 - 1) / 2: the absolute sum of the negative eigenvalues
// of the partial transpose over `side`.
double negativity(const DensityOperator& rho, const std::vector<std::string>& side);

// For each of the 6 unordered particle pairs of a four-qubit state: the 1|1
// negativity of the pair's reduced state (zero certifies separability for
// two qubits) and the entropy of the left qubit's reduction.
std::vector<BipartitionReport> pairwise_entanglement_report(const StateVector& s);

// Loss analysis of a four-qubit state: one entry per lost particle.
std::vector<LossEntry> loss_report(const StateVector& s);

}  // namespace chi4
