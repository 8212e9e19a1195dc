// Copyright (c) 2026 chi4 contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chi4/bases.hpp"
#include "chi4/qstate.hpp"

namespace chi4 {

struct OutcomeRecord {
  std::string basis;
  int index = 0;
  double probability = 0.0;
};

struct CorrectionRecord {
  std::string target;
  int pauli = 0;
};

// Full record of one protocol run.  final_state is empty when the whole
// register was consumed by the measurement.  For dense-coding runs,
// fidelity_to_input is 1 exactly when the decoded message matches.
struct ProtocolTranscript {
  std::string protocol_name;
  std::uint64_t seed = 0;
  std::string channel;
  std::vector<OutcomeRecord> outcomes;
  int classical_bits_sent = 0;
  std::vector<CorrectionRecord> corrections;
  std::optional<StateVector> final_state;
  double fidelity_to_input = 0.0;
  double outcome_probability = 0.0;
};

// Single-qubit teleportation over a Bell pair: Bell measurement on A1A2,
// Pauli correction on B, 2 classical bits.
ProtocolTranscript teleport_standard(const StateVector& psi, std::uint64_t seed);

// Two-qubit teleportation over the four-qubit channel: joint measurement on
// A1A2A3A4, two Pauli corrections on B1B2, 4 classical bits.
ProtocolTranscript teleport_two_qubit(const StateVector& Psi, const BasisParams& p,
                                      std::uint64_t seed);

// First (i, j) in lexicographic order whose Pauli pair maps `conditional`
// onto `target` with fidelity above 1 - tol::kCorrection, if any.  The pair
// acts on the first and second label of `conditional`.
std::optional<std::pair<int, int>> correction_search(const StateVector& conditional,
                                                     const StateVector& target);
std::optional<int> correction_search_single(const StateVector& conditional,
                                            const StateVector& target);

struct PartialOutcomeReport {
  int index = 0;
  bool correctable = false;
  int pauli_first = -1;   // applied to A4
  int pauli_second = -1;  // applied to B1
};

// Run of the A1A2A3B2 measurement variant plus its feasibility analysis.
// The correction table exists only on span{Bell0, Bell1} inputs; the
// general-input verdict is certified by exhausting tables against two
// independent probes outside that span's closure.
struct PartialChannelResult {
  ProtocolTranscript transcript;
  bool input_in_span = false;
  bool faithful_for_input = false;
  bool general_input_feasible = true;
  std::vector<PartialOutcomeReport> outcome_reports;
};

PartialChannelResult teleport_partial_channel(const StateVector& Psi, std::uint64_t seed);

// Single-qubit teleportation through the four-qubit channel on A2B1B2B3 with
// two cooperating parties: Alice Bell-measures A1A2, B1 and B2 measure
// computationally, B3 corrects from the (i, b1, b2) table.  4 classical bits.
ProtocolTranscript teleport_cooperative_ghz_style(const StateVector& psi, std::uint64_t seed);

struct DenseCodeResult {
  int message = 0;
  int decoded = 0;
  ProtocolTranscript transcript;
};

// 4-bit message on the four-qubit channel, decoded by one joint measurement.
DenseCodeResult dense_code_D0(int message, std::uint64_t seed = 0);
// 4-bit message on two Bell pairs, decoded by two local Bell measurements.
DenseCodeResult dense_code_S0(int message, std::uint64_t seed = 0);
// 3-bit message (sigma^0/sigma^3 on A3, sigma^j on B2), decoded in the
// 8-member subspace basis.
DenseCodeResult dense_code_restricted(int message, std::uint64_t seed = 0);

struct CapacityReport {
  int rank = 0;
  bool perfect_decoding = false;
  double max_gram_offdiag = 0.0;
  std::vector<double> gram_eigenvalues;
};

// Rank of the 16x16 Gram matrix of (sigma^i (x) sigma^j on the first two
// labels) applied to the channel; perfect 4-bit decoding needs rank 16 with
// orthogonal images.
CapacityReport dense_code_capacity_check(const StateVector& channel);

// Correction tables the protocols actually apply.  Each is derived once by
// correction_search over probe inputs routed through the real measurement
// machinery, then cached for the process lifetime.
const std::array<int, 4>& standard_correction_table();
const std::array<std::pair<int, int>, 16>& two_qubit_correction_table();
const std::array<std::optional<std::pair<int, int>>, 16>& partial_channel_correction_table();
// Indexed [alice outcome][2*b1 + b2].
const std::array<std::array<int, 4>, 4>& cooperative_correction_table();

// Whether any single outcome-indexed table teleports arbitrary two-qubit
// inputs through the A1A2A3B2 measurement; certified false by probing.
bool partial_channel_general_feasibility();

}  // namespace chi4
