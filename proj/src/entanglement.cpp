// Copyright (c) 2026 chi4 contributors
// SPDX-License-Identifier: Apache-2.0

#include "chi4/entanglement.hpp"

#include <algorithm>
#include <cmath>

#include "chi4/hermitian.hpp"

namespace chi4 {

double von_neumann_entropy(const DensityOperator& rho) {
  double sum = 0.0;
  for (double lambda : rho.eigenvalues()) {
    if (lambda > tol::kEntropyCutoff) sum -= lambda * std::log2(lambda);
  }
  return sum;
}

double binary_entropy_bits(double p) {
  double sum = 0.0;
  if (p > tol::kEntropyCutoff) sum -= p * std::log2(p);
  if (1.0 - p > tol::kEntropyCutoff) sum -= (1.0 - p) * std::log2(1.0 - p);
  return sum;
}

double negativity(const DensityOperator& rho, const std::vector<std::string>& side) {
  const CMatrix pt = partial_transpose(rho, side);
  double neg = 0.0;
  for (double lambda : hermitian_eigenvalues(pt)) {
    if (lambda < 0.0) neg -= lambda;
  }
  return neg;
}

namespace {

void require_four_qubits(const StateVector& s) {
  if (s.n_qubits() != 4) throw DimensionMismatch("report requires a four-qubit state");
}

BipartitionReport split_report(const DensityOperator& rho, const std::vector<std::string>& left) {
  std::vector<std::string> right;
  for (const auto& l : rho.labels()) {
    if (std::find(left.begin(), left.end(), l) == left.end()) right.push_back(l);
  }
  BipartitionReport rep;
  rep.left = left;
  rep.right = right;
  rep.entropy_bits = von_neumann_entropy(partial_trace(rho, left));
  rep.negativity = negativity(rho, left);
  return rep;
}

}  // namespace

std::vector<BipartitionReport> pairwise_entanglement_report(const StateVector& s) {
  require_four_qubits(s);
  const DensityOperator rho = s.density();
  std::vector<BipartitionReport> reports;
  reports.reserve(6);
  const auto& labels = s.labels();
  for (size_t a = 0; a < labels.size(); ++a) {
    for (size_t b = a + 1; b < labels.size(); ++b) {
      const DensityOperator pair = partial_trace(rho, {labels[a], labels[b]});
      reports.push_back(split_report(pair, {labels[a]}));
    }
  }
  return reports;
}

std::vector<LossEntry> loss_report(const StateVector& s) {
  require_four_qubits(s);
  const DensityOperator rho = s.density();
  const auto& labels = s.labels();

  std::vector<LossEntry> entries;
  entries.reserve(4);
  for (const auto& lost : labels) {
    LossEntry entry;
    entry.lost = lost;
    std::vector<std::string> remaining;
    for (const auto& l : labels) {
      if (l != lost) remaining.push_back(l);
    }
    const DensityOperator reduced = partial_trace(rho, remaining);

    for (const auto& l : remaining) {
      const DensityOperator single = partial_trace(reduced, {l});
      entry.single_qubit_entropies.emplace_back(l, von_neumann_entropy(single));
    }
    for (const auto& l : remaining) {
      entry.splits.push_back(split_report(reduced, {l}));
    }
    for (const auto& second : remaining) {
      std::vector<std::string> pair;
      for (const auto& l : remaining) {
        if (l != second) pair.push_back(l);
      }
      const DensityOperator pair_state = partial_trace(reduced, pair);
      SecondLossEntry sl;
      sl.second_lost = second;
      sl.left = pair[0];
      sl.right = pair[1];
      sl.negativity = negativity(pair_state, {pair[0]});
      entry.second_losses.push_back(std::move(sl));
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

}  // namespace chi4
