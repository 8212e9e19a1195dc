// Copyright (c) 2026 chi4 contributors
// SPDX-License-Identifier: Apache-2.0

#include "chi4/protocols.hpp"

#include <cmath>
#include <cstdio>

#include "chi4/hermitian.hpp"
#include "chi4/kernels.hpp"
#include "chi4/measurement.hpp"
#include "chi4/rng.hpp"

namespace chi4 {

namespace {

StateVector bell_pair(const std::string& l0, const std::string& l1) {
  const double r = 1.0 / std::sqrt(2.0);
  return StateVector({l0, l1}, {r, 0.0, 0.0, r});
}

StateVector apply_pauli(int k, const std::string& target, const StateVector& s) {
  return apply_local_operator(pauli_operator(PauliIndex(k)), {target}, s);
}

// a*ca + b*cb, normalized.
StateVector superpose(const StateVector& a, const StateVector& b, cplx ca, cplx cb) {
  std::vector<cplx> amps(a.dim(), cplx{0.0, 0.0});
  kernels::active().caxpy(ca, a.amplitudes().data(), amps.data(), amps.size());
  const StateVector br = b.reordered(a.labels());
  kernels::active().caxpy(cb, br.amplitudes().data(), amps.data(), amps.size());
  return StateVector::from_amplitudes(a.labels(), std::move(amps));
}

// |0>, |1>, and a relative-phase superposition; the third probe rejects
// corrections that fix the first two only up to differing phases.
std::vector<StateVector> single_qubit_probes(const std::string& label) {
  const double r = 1.0 / std::sqrt(2.0);
  std::vector<StateVector> probes;
  probes.emplace_back(std::vector<std::string>{label}, std::vector<cplx>{1.0, 0.0});
  probes.emplace_back(std::vector<std::string>{label}, std::vector<cplx>{0.0, 1.0});
  probes.emplace_back(std::vector<std::string>{label}, std::vector<cplx>{cplx{r, 0.0}, cplx{0.0, r}});
  return probes;
}

// Computational states plus one everywhere-nonzero probe with distinct
// phases; a correction passing all five is phase-coherent on the full space.
std::vector<StateVector> two_qubit_probes(const std::string& l0, const std::string& l1) {
  const std::vector<std::string> labels{l0, l1};
  std::vector<StateVector> probes;
  for (size_t k = 0; k < 4; ++k) probes.push_back(StateVector::basis_state(labels, k));
  probes.emplace_back(labels, std::vector<cplx>{cplx{0.5, 0.0}, cplx{0.0, 0.5}, cplx{-0.5, 0.0},
                                                cplx{0.0, -0.5}});
  return probes;
}

// Bell members 0 and 1 plus their relative-phase superposition.
std::vector<StateVector> span_probes(const std::string& l0, const std::string& l1) {
  const OrthonormalBasis bell = bell_basis(l0, l1);
  const double r = 1.0 / std::sqrt(2.0);
  std::vector<StateVector> probes{bell.state(0), bell.state(1)};
  probes.push_back(superpose(bell.state(0), bell.state(1), cplx{r, 0.0}, cplx{0.0, r}));
  return probes;
}

std::string chi_bar_description(const BasisParams& p) {
  char buf[192];
  std::snprintf(buf, sizeof buf, "chi_bar(theta1=%.17g,theta2=%.17g,phi1=%.17g,phi2=%.17g)",
                p.theta1, p.theta2, p.phi1, p.phi2);
  return buf;
}

void require_qubits(const StateVector& s, size_t n, const char* what) {
  if (s.n_qubits() != n) {
    throw DimensionMismatch(std::string(what) + ": wrong register size");
  }
}

}  // namespace

const std::array<int, 4>& standard_correction_table() {
  static const std::array<int, 4> table = [] {
    const StateVector channel = bell_pair("A2", "B");
    const OrthonormalBasis basis = bell_basis("A1", "A2");
    std::array<std::vector<int>, 4> cands;
    for (auto& c : cands) c = {0, 1, 2, 3};
    for (const StateVector& probe : single_qubit_probes("A1")) {
      const auto dist = outcome_distribution(tensor_product(probe, channel), basis, {"A1", "A2"});
      const StateVector target = probe.relabeled({"B"});
      for (int i = 0; i < 4; ++i) {
        if (dist[i].probability < tol::kZeroProbability) continue;
        std::vector<int> keep;
        for (int k : cands[i]) {
          if (fidelity(apply_pauli(k, "B", *dist[i].post_state), target) >
              1.0 - tol::kCorrection) {
            keep.push_back(k);
          }
        }
        cands[i] = std::move(keep);
      }
    }
    std::array<int, 4> t{};
    for (int i = 0; i < 4; ++i) {
      if (cands[i].empty()) throw DomainError("standard teleportation: no correction found");
      t[i] = cands[i].front();
    }
    return t;
  }();
  return table;
}

const std::array<std::pair<int, int>, 16>& two_qubit_correction_table() {
  static const std::array<std::pair<int, int>, 16> table = [] {
    // The correction for outcome (i, j) does not depend on the basis
    // parameters; the table is derived at the pi/4-difference point.
    const BasisParams p = chi_point();
    const StateVector channel = chi_bar_state(p);
    const OrthonormalBasis basis = pi_bar_basis(p);
    std::array<std::vector<std::pair<int, int>>, 16> cands;
    for (auto& c : cands) {
      for (int k = 0; k < 4; ++k) {
        for (int l = 0; l < 4; ++l) c.emplace_back(k, l);
      }
    }
    for (const StateVector& probe : two_qubit_probes("A1", "A2")) {
      const auto dist = outcome_distribution(tensor_product(probe, channel), basis,
                                             {"A1", "A2", "A3", "A4"});
      const StateVector target = probe.relabeled({"B1", "B2"});
      for (int m = 0; m < 16; ++m) {
        if (dist[m].probability < tol::kZeroProbability) continue;
        std::vector<std::pair<int, int>> keep;
        for (const auto& [k, l] : cands[m]) {
          const StateVector fixed = apply_pauli(l, "B2", apply_pauli(k, "B1", *dist[m].post_state));
          if (fidelity(fixed, target) > 1.0 - tol::kCorrection) keep.emplace_back(k, l);
        }
        cands[m] = std::move(keep);
      }
    }
    std::array<std::pair<int, int>, 16> t{};
    for (int m = 0; m < 16; ++m) {
      if (cands[m].empty()) throw DomainError("two-qubit teleportation: no correction found");
      t[m] = cands[m].front();
    }
    return t;
  }();
  return table;
}

const std::array<std::optional<std::pair<int, int>>, 16>& partial_channel_correction_table() {
  static const std::array<std::optional<std::pair<int, int>>, 16> table = [] {
    const StateVector channel = chi_state();
    const OrthonormalBasis basis = pi_basis_on_A1A2A3B2();
    std::array<std::vector<std::pair<int, int>>, 16> cands;
    for (auto& c : cands) {
      for (int k = 0; k < 4; ++k) {
        for (int l = 0; l < 4; ++l) c.emplace_back(k, l);
      }
    }
    for (const StateVector& probe : span_probes("A1", "A2")) {
      const auto dist = outcome_distribution(tensor_product(probe, channel), basis,
                                             {"A1", "A2", "A3", "B2"});
      const StateVector target = probe.relabeled({"A4", "B1"});
      for (int m = 0; m < 16; ++m) {
        if (dist[m].probability < tol::kZeroProbability) continue;
        std::vector<std::pair<int, int>> keep;
        for (const auto& [k, l] : cands[m]) {
          const StateVector fixed = apply_pauli(l, "B1", apply_pauli(k, "A4", *dist[m].post_state));
          if (fidelity(fixed, target) > 1.0 - tol::kCorrection) keep.emplace_back(k, l);
        }
        cands[m] = std::move(keep);
      }
    }
    std::array<std::optional<std::pair<int, int>>, 16> t{};
    for (int m = 0; m < 16; ++m) {
      if (!cands[m].empty()) t[m] = cands[m].front();
    }
    return t;
  }();
  return table;
}

const std::array<std::array<int, 4>, 4>& cooperative_correction_table() {
  static const std::array<std::array<int, 4>, 4> table = [] {
    const StateVector channel = chi_state().relabeled({"A2", "B1", "B2", "B3"});
    const OrthonormalBasis bell = bell_basis("A1", "A2");
    const OrthonormalBasis comp_b1 = computational_basis({"B1"});
    const OrthonormalBasis comp_b2 = computational_basis({"B2"});
    std::array<std::array<std::vector<int>, 4>, 4> cands;
    for (auto& row : cands) {
      for (auto& c : row) c = {0, 1, 2, 3};
    }
    for (const StateVector& probe : single_qubit_probes("A1")) {
      const StateVector target = probe.relabeled({"B3"});
      const auto dist = outcome_distribution(tensor_product(probe, channel), bell, {"A1", "A2"});
      for (int i = 0; i < 4; ++i) {
        if (dist[i].probability < tol::kZeroProbability) continue;
        const auto dist1 = outcome_distribution(*dist[i].post_state, comp_b1, {"B1"});
        for (int b1 = 0; b1 < 2; ++b1) {
          if (dist1[b1].probability < tol::kZeroProbability) continue;
          const auto dist2 = outcome_distribution(*dist1[b1].post_state, comp_b2, {"B2"});
          for (int b2 = 0; b2 < 2; ++b2) {
            if (dist2[b2].probability < tol::kZeroProbability) continue;
            std::vector<int> keep;
            for (int k : cands[i][2 * b1 + b2]) {
              if (fidelity(apply_pauli(k, "B3", *dist2[b2].post_state), target) >
                  1.0 - tol::kCorrection) {
                keep.push_back(k);
              }
            }
            cands[i][2 * b1 + b2] = std::move(keep);
          }
        }
      }
    }
    std::array<std::array<int, 4>, 4> t{};
    for (int i = 0; i < 4; ++i) {
      for (int c = 0; c < 4; ++c) {
        if (cands[i][c].empty()) {
          throw DomainError("cooperative teleportation: no correction found");
        }
        t[i][c] = cands[i][c].front();
      }
    }
    return t;
  }();
  return table;
}

bool partial_channel_general_feasibility() {
  static const bool feasible = [] {
    const StateVector channel = chi_state();
    const OrthonormalBasis basis = pi_basis_on_A1A2A3B2();
    const OrthonormalBasis bell = bell_basis("A1", "A2");
    // Two inputs that no single table can serve simultaneously certify
    // infeasibility; member 3 maps onto member 0's image.
    const std::array<StateVector, 2> probes{bell.state(0), bell.state(3)};
    std::array<std::vector<MeasurementOutcome>, 2> dists;
    std::array<StateVector, 2> targets{probes[0].relabeled({"A4", "B1"}),
                                       probes[1].relabeled({"A4", "B1"})};
    for (size_t q = 0; q < 2; ++q) {
      dists[q] = outcome_distribution(tensor_product(probes[q], channel), basis,
                                      {"A1", "A2", "A3", "B2"});
    }
    std::array<std::vector<std::pair<int, int>>, 2> fixes;
    for (int m = 0; m < 16; ++m) {
      for (size_t q = 0; q < 2; ++q) {
        fixes[q].clear();
        if (dists[q][m].probability < tol::kZeroProbability) {
          for (int k = 0; k < 4; ++k) {
            for (int l = 0; l < 4; ++l) fixes[q].emplace_back(k, l);
          }
          continue;
        }
        for (int k = 0; k < 4; ++k) {
          for (int l = 0; l < 4; ++l) {
            const StateVector fixed =
                apply_pauli(l, "B1", apply_pauli(k, "A4", *dists[q][m].post_state));
            if (fidelity(fixed, targets[q]) > 1.0 - tol::kCorrection) fixes[q].emplace_back(k, l);
          }
        }
      }
      bool intersects = false;
      for (const auto& a : fixes[0]) {
        for (const auto& b : fixes[1]) {
          if (a == b) {
            intersects = true;
            break;
          }
        }
        if (intersects) break;
      }
      if (!intersects) return false;
    }
    return true;
  }();
  return feasible;
}

ProtocolTranscript teleport_standard(const StateVector& psi, std::uint64_t seed) {
  require_qubits(psi, 1, "teleport_standard");
  const StateVector input = psi.relabeled({"A1"});
  const StateVector channel = bell_pair("A2", "B");
  const OrthonormalBasis basis = bell_basis("A1", "A2");
  const MeasurementOutcome out =
      sample_outcome(tensor_product(input, channel), basis, {"A1", "A2"}, mix_seed(seed, 0));
  const int k = standard_correction_table()[static_cast<size_t>(out.index)];
  const StateVector final_state = apply_pauli(k, "B", *out.post_state);

  ProtocolTranscript t;
  t.protocol_name = "teleport_standard";
  t.seed = seed;
  t.channel = "bell(A2,B)";
  t.outcomes.push_back({out.basis_name, out.index, out.probability});
  t.classical_bits_sent = 2;
  t.corrections.push_back({"B", k});
  t.fidelity_to_input = fidelity(final_state.relabeled(psi.labels()), psi);
  t.final_state = final_state;
  t.outcome_probability = out.probability;
  return t;
}

ProtocolTranscript teleport_two_qubit(const StateVector& Psi, const BasisParams& p,
                                      std::uint64_t seed) {
  require_qubits(Psi, 2, "teleport_two_qubit");
  p.validate();
  const StateVector input = Psi.relabeled({"A1", "A2"});
  const StateVector channel = chi_bar_state(p);
  const OrthonormalBasis basis = pi_bar_basis(p);
  const MeasurementOutcome out = sample_outcome(tensor_product(input, channel), basis,
                                                {"A1", "A2", "A3", "A4"}, mix_seed(seed, 0));
  const auto [k, l] = two_qubit_correction_table()[static_cast<size_t>(out.index)];
  const StateVector final_state = apply_pauli(l, "B2", apply_pauli(k, "B1", *out.post_state));

  ProtocolTranscript t;
  t.protocol_name = "teleport_two_qubit";
  t.seed = seed;
  t.channel = chi_bar_description(p);
  t.outcomes.push_back({out.basis_name, out.index, out.probability});
  t.classical_bits_sent = 4;
  t.corrections.push_back({"B1", k});
  t.corrections.push_back({"B2", l});
  t.fidelity_to_input = fidelity(final_state.relabeled(Psi.labels()), Psi);
  t.final_state = final_state;
  t.outcome_probability = out.probability;
  return t;
}

std::optional<std::pair<int, int>> correction_search(const StateVector& conditional,
                                                     const StateVector& target) {
  require_qubits(conditional, 2, "correction_search");
  const std::string& l0 = conditional.labels()[0];
  const std::string& l1 = conditional.labels()[1];
  for (int i = 0; i < 4; ++i) {
    const StateVector si = apply_pauli(i, l0, conditional);
    for (int j = 0; j < 4; ++j) {
      if (fidelity(apply_pauli(j, l1, si), target) > 1.0 - tol::kCorrection) {
        return std::make_pair(i, j);
      }
    }
  }
  return std::nullopt;
}

std::optional<int> correction_search_single(const StateVector& conditional,
                                            const StateVector& target) {
  require_qubits(conditional, 1, "correction_search_single");
  const std::string& l0 = conditional.labels()[0];
  for (int i = 0; i < 4; ++i) {
    if (fidelity(apply_pauli(i, l0, conditional), target) > 1.0 - tol::kCorrection) return i;
  }
  return std::nullopt;
}

PartialChannelResult teleport_partial_channel(const StateVector& Psi, std::uint64_t seed) {
  require_qubits(Psi, 2, "teleport_partial_channel");
  const StateVector input = Psi.relabeled({"A1", "A2"});
  const StateVector channel = chi_state();
  const OrthonormalBasis basis = pi_basis_on_A1A2A3B2();
  const auto& table = partial_channel_correction_table();

  const OrthonormalBasis bell = bell_basis("A1", "A2");
  const double span_weight =
      std::norm(inner_product(bell.state(0), input)) + std::norm(inner_product(bell.state(1), input));

  const StateVector total = tensor_product(input, channel);
  const std::vector<std::string> targets{"A1", "A2", "A3", "B2"};
  const StateVector expected = Psi.relabeled({"A4", "B1"});

  PartialChannelResult result;
  result.input_in_span = span_weight > 1.0 - tol::kCorrection;
  result.general_input_feasible = partial_channel_general_feasibility();

  // Per-outcome faithfulness for this input, over the full distribution.
  result.faithful_for_input = true;
  const auto dist = outcome_distribution(total, basis, targets);
  for (int m = 0; m < 16; ++m) {
    PartialOutcomeReport rep;
    rep.index = m;
    rep.correctable = table[static_cast<size_t>(m)].has_value();
    if (rep.correctable) {
      rep.pauli_first = table[static_cast<size_t>(m)]->first;
      rep.pauli_second = table[static_cast<size_t>(m)]->second;
    }
    result.outcome_reports.push_back(rep);
    if (dist[m].probability < tol::kZeroProbability) continue;
    if (!rep.correctable) {
      result.faithful_for_input = false;
      continue;
    }
    const StateVector fixed =
        apply_pauli(rep.pauli_second, "B1", apply_pauli(rep.pauli_first, "A4", *dist[m].post_state));
    if (fidelity(fixed, expected) <= 1.0 - tol::kCorrection) result.faithful_for_input = false;
  }

  const MeasurementOutcome out = sample_outcome(total, basis, targets, mix_seed(seed, 0));
  ProtocolTranscript t;
  t.protocol_name = "teleport_partial_channel";
  t.seed = seed;
  t.channel = "chi(A3,A4,B1,B2)";
  t.outcomes.push_back({out.basis_name, out.index, out.probability});
  t.classical_bits_sent = 4;
  StateVector final_state = *out.post_state;
  if (const auto& entry = table[static_cast<size_t>(out.index)]) {
    final_state = apply_pauli(entry->second, "B1", apply_pauli(entry->first, "A4", final_state));
    t.corrections.push_back({"A4", entry->first});
    t.corrections.push_back({"B1", entry->second});
  }
  t.fidelity_to_input = fidelity(final_state.relabeled(Psi.labels()), Psi);
  t.final_state = final_state;
  t.outcome_probability = out.probability;
  result.transcript = std::move(t);
  return result;
}

ProtocolTranscript teleport_cooperative_ghz_style(const StateVector& psi, std::uint64_t seed) {
  require_qubits(psi, 1, "teleport_cooperative_ghz_style");
  const StateVector input = psi.relabeled({"A1"});
  const StateVector channel = chi_state().relabeled({"A2", "B1", "B2", "B3"});
  const OrthonormalBasis bell = bell_basis("A1", "A2");

  const MeasurementOutcome alice =
      sample_outcome(tensor_product(input, channel), bell, {"A1", "A2"}, mix_seed(seed, 0));
  const MeasurementOutcome first = sample_outcome(*alice.post_state, computational_basis({"B1"}),
                                                  {"B1"}, mix_seed(seed, 1));
  const MeasurementOutcome second = sample_outcome(*first.post_state, computational_basis({"B2"}),
                                                   {"B2"}, mix_seed(seed, 2));
  const int k = cooperative_correction_table()[static_cast<size_t>(alice.index)]
                                              [static_cast<size_t>(2 * first.index + second.index)];
  const StateVector final_state = apply_pauli(k, "B3", *second.post_state);

  ProtocolTranscript t;
  t.protocol_name = "teleport_cooperative";
  t.seed = seed;
  t.channel = "chi(A2,B1,B2,B3)";
  t.outcomes.push_back({alice.basis_name, alice.index, alice.probability});
  t.outcomes.push_back({first.basis_name, first.index, first.probability});
  t.outcomes.push_back({second.basis_name, second.index, second.probability});
  t.classical_bits_sent = 4;
  t.corrections.push_back({"B3", k});
  t.fidelity_to_input = fidelity(final_state.relabeled(psi.labels()), psi);
  t.final_state = final_state;
  t.outcome_probability = alice.probability * first.probability * second.probability;
  return t;
}

namespace {

void check_message_range(int message, int limit, const char* what) {
  if (message < 0 || message >= limit) {
    throw DomainError(std::string(what) + ": message out of range");
  }
}

}  // namespace

DenseCodeResult dense_code_D0(int message, std::uint64_t seed) {
  check_message_range(message, 16, "dense_code_D0");
  const int i = message / 4;
  const int j = message % 4;
  const StateVector encoded = apply_pauli(j, "A4", apply_pauli(i, "A3", chi_state()));
  const OrthonormalBasis basis = chi_basis();
  const MeasurementOutcome out =
      sample_outcome(encoded, basis, {"A3", "A4", "B1", "B2"}, mix_seed(seed, 0));

  DenseCodeResult r;
  r.message = message;
  r.decoded = out.index;
  r.transcript.protocol_name = "dense_code_D0";
  r.transcript.seed = seed;
  r.transcript.channel = "chi(A3,A4,B1,B2)";
  r.transcript.outcomes.push_back({out.basis_name, out.index, out.probability});
  r.transcript.classical_bits_sent = 4;
  r.transcript.fidelity_to_input = (r.decoded == message) ? 1.0 : 0.0;
  r.transcript.outcome_probability = out.probability;
  return r;
}

DenseCodeResult dense_code_S0(int message, std::uint64_t seed) {
  check_message_range(message, 16, "dense_code_S0");
  const int i = message / 4;
  const int j = message % 4;
  const StateVector encoded =
      apply_pauli(j, "A4", apply_pauli(i, "A3", reference_state(ReferenceKind::kBellPairProduct)));
  const OrthonormalBasis first_basis = bell_basis("A3", "B1");
  const OrthonormalBasis second_basis = bell_basis("A4", "B2");
  const MeasurementOutcome first =
      sample_outcome(encoded, first_basis, {"A3", "B1"}, mix_seed(seed, 0));
  const MeasurementOutcome second =
      sample_outcome(*first.post_state, second_basis, {"A4", "B2"}, mix_seed(seed, 1));

  DenseCodeResult r;
  r.message = message;
  r.decoded = 4 * first.index + second.index;
  r.transcript.protocol_name = "dense_code_S0";
  r.transcript.seed = seed;
  r.transcript.channel = "bell_pair_product(A3,A4,B1,B2)";
  r.transcript.outcomes.push_back({first.basis_name, first.index, first.probability});
  r.transcript.outcomes.push_back({second.basis_name, second.index, second.probability});
  r.transcript.classical_bits_sent = 4;
  r.transcript.fidelity_to_input = (r.decoded == message) ? 1.0 : 0.0;
  r.transcript.outcome_probability = first.probability * second.probability;
  return r;
}

DenseCodeResult dense_code_restricted(int message, std::uint64_t seed) {
  check_message_range(message, 8, "dense_code_restricted");
  const int top = message >> 2;
  const int j = message & 3;
  const StateVector encoded =
      apply_pauli(j, "B2", apply_pauli(3 * top, "A3", chi_state()));
  const OrthonormalBasis basis = subspace_basis_8();
  const MeasurementOutcome out =
      sample_outcome(encoded, basis, {"A3", "A4", "B1", "B2"}, mix_seed(seed, 0));

  DenseCodeResult r;
  r.message = message;
  r.decoded = out.index;
  r.transcript.protocol_name = "dense_code_restricted";
  r.transcript.seed = seed;
  r.transcript.channel = "chi(A3,A4,B1,B2)";
  r.transcript.outcomes.push_back({out.basis_name, out.index, out.probability});
  r.transcript.classical_bits_sent = 3;
  r.transcript.fidelity_to_input = (r.decoded == message) ? 1.0 : 0.0;
  r.transcript.outcome_probability = out.probability;
  return r;
}

CapacityReport dense_code_capacity_check(const StateVector& channel) {
  require_qubits(channel, 4, "dense_code_capacity_check");
  const std::string& l0 = channel.labels()[0];
  const std::string& l1 = channel.labels()[1];
  std::vector<StateVector> images;
  images.reserve(16);
  for (int i = 0; i < 4; ++i) {
    const StateVector si = apply_pauli(i, l0, channel);
    for (int j = 0; j < 4; ++j) images.push_back(apply_pauli(j, l1, si));
  }
  CMatrix gram(16, 16);
  double max_offdiag = 0.0;
  for (size_t a = 0; a < 16; ++a) {
    for (size_t b = 0; b < 16; ++b) {
      gram.at(a, b) = inner_product(images[a], images[b]);
      if (a != b) max_offdiag = std::max(max_offdiag, std::abs(gram.at(a, b)));
    }
  }
  CapacityReport report;
  report.gram_eigenvalues = hermitian_eigenvalues(gram);
  for (double lambda : report.gram_eigenvalues) {
    if (lambda > tol::kRank) ++report.rank;
  }
  report.max_gram_offdiag = max_offdiag;
  report.perfect_decoding = (report.rank == 16) && (max_offdiag < tol::kInvariant);
  return report;
}

}  // namespace chi4
