// Copyright (c) 2026 chi4 contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chi4/bases.hpp"
#include "chi4/qstate.hpp"

namespace chi4 {

// One projective outcome.  post_state is empty in three cases: probability
// below tol::kZeroProbability, the whole register was measured, or the entry
// is the unprojected remainder of an incomplete basis (index == kRemainder).
struct MeasurementOutcome {
  static constexpr int kRemainder = -1;

  std::string basis_name;
  int index = 0;
  double probability = 0.0;
  std::optional<StateVector> post_state;
};

// Projects s onto each basis member over the target qubits.  The basis must
// live on exactly the target labels; targets may cover the full register.
// Incomplete bases get a trailing remainder entry carrying the leftover
// weight.  Conditional states keep the unmeasured labels in original order.
std::vector<MeasurementOutcome> outcome_distribution(const StateVector& s,
                                                     const OrthonormalBasis& basis,
                                                     const std::vector<std::string>& targets);

// Draws one outcome by inverse CDF over ascending member index, using the
// named deterministic generator.  Throws IncompleteBasisSample if the basis
// leaves more than 1e-9 of the state's weight unprojected.
MeasurementOutcome sample_outcome(const StateVector& s, const OrthonormalBasis& basis,
                                  const std::vector<std::string>& targets, std::uint64_t seed);

}  // namespace chi4
