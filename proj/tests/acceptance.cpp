// Copyright (c) 2026 chi4 contributors
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance gate: one line per criterion, [PASS]/[FAIL] with the measured
// numbers.  Exit status is the number of failed criteria capped at 1.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "chi4/bases.hpp"
#include "chi4/entanglement.hpp"
#include "chi4/measurement.hpp"
#include "chi4/protocols.hpp"
#include "chi4/qstate.hpp"
#include "chi4/rng.hpp"
#include "chi4/types.hpp"

using namespace chi4;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int num, const char* name, bool pass, const std::string& detail) {
  std::printf("[%s] %2d. %s: %s\n", pass ? "PASS" : "FAIL", num, name, detail.c_str());
  if (!pass) ++g_failures;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* format, ...) {
  char buf[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof buf, format, args);
  va_end(args);
  return buf;
}

// Closed form of the four-qubit channel, written out independently of the
// library's construction so the two routes can disagree.
std::vector<cplx> closed_form(const BasisParams& p) {
  const double dt = p.theta1 - p.theta2;
  const double dp = p.phi1 - p.phi2;
  std::vector<cplx> amps(16, cplx{});
  amps[0b0000] = std::cos(dt) / 2.0;
  amps[0b1111] = std::cos(dt) / 2.0;
  amps[0b0011] = -std::sin(dt) / 2.0;
  amps[0b1100] = std::sin(dt) / 2.0;
  amps[0b0101] = -std::sin(dp) / 2.0;
  amps[0b1010] = std::sin(dp) / 2.0;
  amps[0b0110] = std::cos(dp) / 2.0;
  amps[0b1001] = std::cos(dp) / 2.0;
  return amps;
}

double gram_defect(const OrthonormalBasis& basis) {
  double d = 0.0;
  for (size_t m = 0; m < basis.size(); ++m) {
    for (size_t n = 0; n < basis.size(); ++n) {
      const cplx g = inner_product(basis.state(m), basis.state(n));
      d = std::max(d, std::abs(g - ((m == n) ? cplx{1.0, 0.0} : cplx{0.0, 0.0})));
    }
  }
  return d;
}

// 1. Single-qubit teleportation: 1000 random inputs, fidelity and the exact
//    uniform outcome law, under one second.
void criterion_1() {
  const auto start = Clock::now();
  Rng rng(1001);
  double min_fid = 1.0;
  double max_prob_err = 0.0;
  const double r = 1.0 / std::sqrt(2.0);
  const StateVector pair({"A2", "B"}, {r, 0.0, 0.0, r});
  const OrthonormalBasis bell = bell_basis("A1", "A2");
  for (std::uint64_t run = 0; run < 1000; ++run) {
    const StateVector psi = random_state({"A1"}, rng);
    const ProtocolTranscript t = teleport_standard(psi, run);
    min_fid = std::min(min_fid, t.fidelity_to_input);
    const auto dist = outcome_distribution(tensor_product(psi, pair), bell, {"A1", "A2"});
    for (const auto& out : dist) {
      max_prob_err = std::max(max_prob_err, std::abs(out.probability - 0.25));
    }
  }
  const double dt = seconds_since(start);
  const bool pass = min_fid >= 1.0 - 1e-9 && max_prob_err <= 1e-10 && dt < 1.0;
  report(1, "single-qubit teleportation", pass,
         fmt("min fidelity %.12g, max |p - 1/4| %.3g, %.2f s", min_fid, max_prob_err, dt));
}

// 2. Two-qubit teleportation: 1000 random inputs for each of 20 parameter
//    sets including the maximal point, uniform 16-way outcome law, under
//    ten seconds.
void criterion_2() {
  const auto start = Clock::now();
  Rng rng(1002);
  double min_fid = 1.0;
  double max_prob_err = 0.0;
  std::uint64_t seed = 0;
  for (int set = 0; set < 20; ++set) {
    const BasisParams p = (set == 0) ? chi_point() : random_basis_params(rng);
    const StateVector channel = chi_bar_state(p);
    const OrthonormalBasis basis = pi_bar_basis(p);
    for (int run = 0; run < 1000; ++run) {
      const StateVector Psi = random_state({"A1", "A2"}, rng);
      const ProtocolTranscript t = teleport_two_qubit(Psi, p, seed++);
      min_fid = std::min(min_fid, t.fidelity_to_input);
      const auto dist = outcome_distribution(tensor_product(Psi, channel), basis,
                                             {"A1", "A2", "A3", "A4"});
      for (const auto& out : dist) {
        max_prob_err = std::max(max_prob_err, std::abs(out.probability - 1.0 / 16.0));
      }
    }
  }
  const double dt = seconds_since(start);
  const bool pass = min_fid >= 1.0 - 1e-9 && max_prob_err <= 1e-10 && dt < 10.0;
  report(2, "two-qubit teleportation", pass,
         fmt("min fidelity %.12g, max |p - 1/16| %.3g, %.2f s", min_fid, max_prob_err, dt));
}

// 3. Every measurement basis is orthonormal to 1e-10; the half-space family
//    has exactly eight members.
void criterion_3() {
  Rng rng(1003);
  double defect = gram_defect(bell_basis("A1", "A2"));
  for (int draw = 0; draw < 100; ++draw) {
    const BasisParams p = random_basis_params(rng);
    defect = std::max(defect, gram_defect(parametrized_two_qubit_basis(
                                  BasisKind::kJ, p.theta1, p.phi1, "a", "b")));
    defect = std::max(defect, gram_defect(parametrized_two_qubit_basis(
                                  BasisKind::kJprime, p.theta2, p.phi2, "a", "b")));
    defect = std::max(defect, gram_defect(pi_bar_basis(p)));
  }
  defect = std::max(defect, gram_defect(chi_basis()));
  defect = std::max(defect, gram_defect(pi_basis_on_A1A2A3B2()));
  const OrthonormalBasis sub = subspace_basis_8();
  defect = std::max(defect, gram_defect(sub));
  const bool pass = defect <= 1e-10 && sub.size() == 8;
  report(3, "measurement basis integrity", pass,
         fmt("max Gram defect %.3g, half-space members %zu", defect, sub.size()));
}

// 4. The summed channel construction equals the closed form to 1e-12, and
//    the maximal channel carries the eight-value pattern bit for bit.
void criterion_4() {
  Rng rng(1004);
  double max_diff = 0.0;
  for (int draw = 0; draw < 100; ++draw) {
    const BasisParams p = random_basis_params(rng);
    const StateVector channel = chi_bar_state(p);
    const std::vector<cplx> expect = closed_form(p);
    for (size_t k = 0; k < 16; ++k) {
      max_diff = std::max(max_diff, std::abs(channel.amplitude(k) - expect[k]));
    }
  }

  const double a = 1.0 / (2.0 * std::sqrt(2.0));
  std::vector<cplx> pattern(16, cplx{});
  pattern[0b0000] = a;
  pattern[0b0011] = -a;
  pattern[0b0101] = -a;
  pattern[0b0110] = a;
  pattern[0b1001] = a;
  pattern[0b1010] = a;
  pattern[0b1100] = a;
  pattern[0b1111] = a;
  double exact_diff = 0.0;
  const StateVector chi = chi_state();
  for (size_t k = 0; k < 16; ++k) {
    exact_diff = std::max(exact_diff, std::abs(chi.amplitude(k) - pattern[k]));
  }
  double point_diff = 0.0;
  const StateVector summed = chi_bar_state(chi_point());
  for (size_t k = 0; k < 16; ++k) {
    point_diff = std::max(point_diff, std::abs(summed.amplitude(k) - pattern[k]));
  }

  const bool pass = max_diff <= 1e-12 && exact_diff == 0.0 && point_diff <= 1e-12;
  report(4, "channel closed form", pass,
         fmt("max closed-form gap %.3g, literal pattern gap %.3g, summed point gap %.3g",
             max_diff, exact_diff, point_diff));
}

// 5. The outer-pair entropy formula matches the spectral value on a 50-point
//    grid, peaks at exactly one bit, and every single qubit of the maximal
//    channel is maximally mixed.
void criterion_5() {
  const double half_pi = std::acos(-1.0) / 2.0;
  double max_gap = 0.0;
  double grid_max = 0.0;
  for (int k = 1; k <= 50; ++k) {
    const double delta = half_pi * k / 51.0;
    const double spectral = von_neumann_entropy(
        partial_trace(chi_bar_state(equal_gap_params(delta)), {"A3", "B2"}));
    const double formula = binary_entropy_bits(std::cos(delta) * std::cos(delta));
    max_gap = std::max(max_gap, std::abs(spectral - formula));
    grid_max = std::max(grid_max, spectral);
  }
  const double peak = von_neumann_entropy(
      partial_trace(chi_bar_state(equal_gap_params(half_pi / 2.0)), {"A3", "B2"}));

  double single_gap = 0.0;
  for (const char* label : {"A3", "A4", "B1", "B2"}) {
    const double s = von_neumann_entropy(partial_trace(chi_state(), {label}));
    single_gap = std::max(single_gap, std::abs(s - 1.0));
  }

  const bool pass =
      max_gap <= 1e-9 && std::abs(peak - 1.0) <= 1e-9 && peak >= grid_max && single_gap <= 1e-10;
  report(5, "entropy claims", pass,
         fmt("max formula gap %.3g, peak %.12g, max single-qubit gap %.3g", max_gap, peak,
             single_gap));
}

// 6. Pairwise separability of the maximal channel, the two equal positive
//    one-loss splits, fragility under a second loss, and the opposite
//    pattern for the product of two pairs.
void criterion_6() {
  const StateVector chi = chi_state();
  double max_pair = 0.0;
  for (const auto& rep : pairwise_entanglement_report(chi)) {
    max_pair = std::max(max_pair, rep.negativity);
  }

  const auto losses = loss_report(chi);
  double split_gap = 1.0;
  double split_min = 0.0;
  double max_second = 0.0;
  for (const auto& entry : losses) {
    for (const auto& sl : entry.second_losses) {
      max_second = std::max(max_second, sl.negativity);
    }
  }
  const auto& lost_a3 = losses.front();
  double neg_a4 = -1.0, neg_b1 = -1.0;
  for (const auto& split : lost_a3.splits) {
    if (split.left == std::vector<std::string>{"A4"}) neg_a4 = split.negativity;
    if (split.left == std::vector<std::string>{"B1"}) neg_b1 = split.negativity;
  }
  split_gap = std::abs(neg_a4 - neg_b1);
  split_min = std::min(neg_a4, neg_b1);

  double product_err = 0.0;
  for (const auto& rep : pairwise_entanglement_report(reference_state(ReferenceKind::kBellPairProduct))) {
    const bool linked = (rep.left == std::vector<std::string>{"A3"} &&
                         rep.right == std::vector<std::string>{"B1"}) ||
                        (rep.left == std::vector<std::string>{"A4"} &&
                         rep.right == std::vector<std::string>{"B2"});
    product_err = std::max(product_err, std::abs(rep.negativity - (linked ? 0.5 : 0.0)));
  }

  const bool pass = max_pair <= 1e-10 && split_gap <= 1e-10 && split_min > 0.01 &&
                    max_second <= 1e-10 && product_err <= 1e-10;
  report(6, "entanglement structure", pass,
         fmt("max pair negativity %.3g, one-loss splits %.6g/%.6g, max second-loss %.3g, "
             "pair-product error %.3g",
             max_pair, neg_a4, neg_b1, max_second, product_err));
}

// 7. All dense-coding schemes decode every message; the Gram rank separates
//    the maximal channel from the four-party comparison state.  Under one
//    second.
void criterion_7() {
  const auto start = Clock::now();
  int d0_ok = 0, s0_ok = 0, restricted_ok = 0;
  for (int m = 0; m < 16; ++m) {
    if (dense_code_D0(m).decoded == m) ++d0_ok;
    const DenseCodeResult s = dense_code_S0(m);
    if (s.decoded == m && s.transcript.outcomes.size() == 2) ++s0_ok;
  }
  for (int m = 0; m < 8; ++m) {
    if (dense_code_restricted(m).decoded == m) ++restricted_ok;
  }
  const CapacityReport chi = dense_code_capacity_check(chi_state());
  const CapacityReport ghz = dense_code_capacity_check(reference_state(ReferenceKind::kGhz4));
  const double dt = seconds_since(start);
  const bool pass = d0_ok == 16 && s0_ok == 16 && restricted_ok == 8 && chi.rank == 16 &&
                    chi.perfect_decoding && ghz.rank < 16 && dt < 1.0;
  report(7, "dense coding", pass,
         fmt("decoded %d/16, %d/16, %d/8; ranks %d vs %d; %.2f s", d0_ok, s0_ok, restricted_ok,
             chi.rank, ghz.rank, dt));
}

// 8. The reduced-register variant teleports the two-dimensional subspace
//    with fidelity 1, reproduces the pair-to-pair transfer map term by
//    term, and certifies that no table covers arbitrary inputs.
void criterion_8() {
  Rng rng(1008);
  const OrthonormalBasis bell_in = bell_basis("A1", "A2");
  double min_fid = 1.0;
  bool all_faithful = true;
  for (std::uint64_t run = 0; run < 100; ++run) {
    const cplx c0 = rng.complex_gaussian();
    const cplx c1 = rng.complex_gaussian();
    std::vector<cplx> amps(4, cplx{});
    for (size_t k = 0; k < 4; ++k) {
      amps[k] = c0 * bell_in.state(0).amplitude(k) + c1 * bell_in.state(1).amplitude(k);
    }
    const PartialChannelResult r =
        teleport_partial_channel(StateVector::from_amplitudes({"A1", "A2"}, std::move(amps)), run);
    min_fid = std::min(min_fid, r.transcript.fidelity_to_input);
    all_faithful = all_faithful && r.faithful_for_input && r.input_in_span;
  }

  // Transfer map at the first outcome: pair inputs 0,1,2,3 land on pair
  // images 0,1,1,0 with weight 1/16 each.
  const OrthonormalBasis pi = pi_basis_on_A1A2A3B2();
  const OrthonormalBasis bell_out = bell_basis("A4", "B1");
  const int image_of[4] = {0, 1, 1, 0};
  double map_err = 0.0;
  for (int n = 0; n < 4; ++n) {
    const auto dist =
        outcome_distribution(tensor_product(bell_in.state(n), chi_state()), pi, pi.labels());
    map_err = std::max(map_err, std::abs(dist[0].probability - 1.0 / 16.0));
    const cplx overlap = inner_product(bell_out.state(image_of[n]), *dist[0].post_state);
    map_err = std::max(map_err, std::abs(1.0 - std::abs(overlap)));
  }

  const bool infeasible = !partial_channel_general_feasibility();
  const bool pass = min_fid >= 1.0 - 1e-9 && all_faithful && map_err <= 1e-10 && infeasible;
  report(8, "reduced-register teleportation", pass,
         fmt("min fidelity %.12g, transfer-map error %.3g, general tables %s", min_fid, map_err,
             infeasible ? "certified infeasible" : "unexpectedly feasible"));
}

// 9. Cooperative teleportation: 1000 random inputs come through faithfully,
//    and the four conditional branches match their interference patterns to
//    1e-12.
void criterion_9() {
  Rng rng(1009);
  double min_fid = 1.0;
  for (std::uint64_t run = 0; run < 1000; ++run) {
    const ProtocolTranscript t = teleport_cooperative_ghz_style(random_state({"A1"}, rng), run);
    min_fid = std::min(min_fid, t.fidelity_to_input);
  }

  std::vector<cplx> g(8, cplx{}), u(8, cplx{});
  g[0] = 1.0;
  g[3] = -1.0;
  g[5] = -1.0;
  g[6] = 1.0;
  u[1] = 1.0;
  u[2] = 1.0;
  u[4] = 1.0;
  u[7] = 1.0;
  const cplx branch_phase[4] = {{1.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}, {1.0, 0.0}};
  double branch_err = 0.0;
  for (int trial = 0; trial < 4; ++trial) {
    const StateVector input = random_state({"A1"}, rng);
    const cplx a = input.amplitude(0);
    const cplx b = input.amplitude(1);
    const auto dist =
        outcome_distribution(tensor_product(input, chi_state().relabeled({"A2", "B1", "B2", "B3"})),
                             bell_basis("A1", "A2"), {"A1", "A2"});
    for (int i = 0; i < 4; ++i) {
      std::vector<cplx> v(8);
      for (size_t k = 0; k < 8; ++k) {
        switch (i) {
          case 0: v[k] = a * g[k] + b * u[k]; break;
          case 1: v[k] = a * u[k] + b * g[k]; break;
          case 2: v[k] = a * u[k] - b * g[k]; break;
          default: v[k] = a * g[k] - b * u[k]; break;
        }
        v[k] *= 0.5;
      }
      const StateVector branch({"B1", "B2", "B3"}, std::move(v));
      const cplx overlap = inner_product(branch, *dist[static_cast<size_t>(i)].post_state);
      branch_err = std::max(branch_err, std::abs(overlap - branch_phase[i]));
      branch_err = std::max(branch_err, std::abs(dist[static_cast<size_t>(i)].probability - 0.25));
    }
  }

  const bool pass = min_fid >= 1.0 - 1e-9 && branch_err <= 1e-12;
  report(9, "cooperative teleportation", pass,
         fmt("min fidelity %.12g, max branch error %.3g", min_fid, branch_err));
}

// 10. Empirical frequencies of the sixteen-outcome measurement track the
//     uniform law within four standard errors over 1e5 seeded samples.
void criterion_10() {
  const std::uint64_t master = 1010;
  Rng rng(master);
  const BasisParams p = chi_point();
  const StateVector joint = tensor_product(random_state({"A1", "A2"}, rng), chi_bar_state(p));
  const OrthonormalBasis basis = pi_bar_basis(p);
  const std::vector<std::string> targets{"A1", "A2", "A3", "A4"};

  const int n = 100000;
  std::vector<int> counts(16, 0);
  for (int k = 0; k < n; ++k) {
    const MeasurementOutcome out =
        sample_outcome(joint, basis, targets, master + static_cast<std::uint64_t>(k));
    ++counts[static_cast<size_t>(out.index)];
  }
  const double expect = 1.0 / 16.0;
  const double sigma = std::sqrt(expect * (1.0 - expect) / n);
  double max_dev = 0.0;
  for (int c : counts) {
    max_dev = std::max(max_dev, std::abs(static_cast<double>(c) / n - expect));
  }
  const bool pass = max_dev <= 4.0 * sigma;
  report(10, "sampling soundness", pass,
         fmt("max |freq - 1/16| %.3g vs 4 sigma %.3g over %d samples", max_dev, 4.0 * sigma, n));
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  if (g_failures) {
    std::printf("%d criteria failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
