// Copyright (c) 2026 chi4 contributors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <cstdint>
#include <vector>

#include "chi4/bases.hpp"
#include "chi4/measurement.hpp"
#include "chi4/qstate.hpp"
#include "chi4/rng.hpp"
#include "chi4/types.hpp"
#include "doctest.h"

using namespace chi4;

TEST_CASE("measuring a basis member is certain") {
  const OrthonormalBasis bell = bell_basis("a", "b");
  for (size_t k = 0; k < 4; ++k) {
    const auto dist = outcome_distribution(bell.state(k), bell, {"a", "b"});
    REQUIRE(dist.size() == 4);
    for (size_t m = 0; m < 4; ++m) {
      CHECK(dist[m].probability == doctest::Approx(m == k ? 1.0 : 0.0).epsilon(1e-14));
      // The whole register was measured, so no conditional state survives.
      CHECK_FALSE(dist[m].post_state.has_value());
    }
  }
}

TEST_CASE("pre-shared pair makes the sender's outcomes uniform") {
  Rng rng(3);
  const double r = 1.0 / std::sqrt(2.0);
  const StateVector pair({"A2", "B"}, {r, 0.0, 0.0, r});
  for (int rep = 0; rep < 25; ++rep) {
    const StateVector input = random_state({"A1"}, rng);
    const StateVector joint = tensor_product(input, pair);
    const auto dist = outcome_distribution(joint, bell_basis("A1", "A2"), {"A1", "A2"});
    double total = 0.0;
    for (const auto& out : dist) {
      CHECK(std::abs(out.probability - 0.25) < 1e-10);
      total += out.probability;
      REQUIRE(out.post_state.has_value());
      CHECK(out.post_state->labels() == std::vector<std::string>{"B"});
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("four-qubit channel makes the sixteen sender outcomes uniform") {
  Rng rng(5);
  for (int rep = 0; rep < 5; ++rep) {
    const BasisParams p = random_basis_params(rng);
    const StateVector input = random_state({"A1", "A2"}, rng);
    const StateVector joint = tensor_product(input, chi_bar_state(p));
    const auto dist =
        outcome_distribution(joint, pi_bar_basis(p), {"A1", "A2", "A3", "A4"});
    REQUIRE(dist.size() == 16);
    for (const auto& out : dist) {
      CHECK(std::abs(out.probability - 1.0 / 16.0) < 1e-10);
      REQUIRE(out.post_state.has_value());
      CHECK(out.post_state->labels() == std::vector<std::string>{"B1", "B2"});
    }
  }
}

TEST_CASE("conditional states collapse the partner qubit") {
  const double r = 1.0 / std::sqrt(2.0);
  const StateVector pair({"a", "b"}, {r, 0.0, 0.0, r});
  const auto dist = outcome_distribution(pair, computational_basis({"a"}), {"a"});
  REQUIRE(dist.size() == 2);
  for (int k = 0; k < 2; ++k) {
    CHECK(dist[k].probability == doctest::Approx(0.5).epsilon(1e-14));
    REQUIRE(dist[k].post_state.has_value());
    CHECK(std::abs(dist[k].post_state->amplitude(static_cast<size_t>(k)) - 1.0) < 1e-14);
  }
}

TEST_CASE("unmeasured labels keep their original order") {
  Rng rng(7);
  const StateVector s = random_state({"a", "b", "c"}, rng);
  const auto dist = outcome_distribution(s, computational_basis({"b"}), {"b"});
  for (const auto& out : dist) {
    if (!out.post_state) continue;
    CHECK(out.post_state->labels() == std::vector<std::string>{"a", "c"});
  }
}

TEST_CASE("measuring one side does not move the other side's marginals") {
  Rng rng(11);
  for (int rep = 0; rep < 10; ++rep) {
    const StateVector s = random_state({"a", "b", "c"}, rng);
    const auto direct = outcome_distribution(s, computational_basis({"b"}), {"b"});

    // Average of the conditional distributions, weighted by outcome.
    const auto first = outcome_distribution(s, computational_basis({"a"}), {"a"});
    std::vector<double> mixed(2, 0.0);
    for (const auto& out : first) {
      if (!out.post_state) continue;
      const auto cond =
          outcome_distribution(*out.post_state, computational_basis({"b"}), {"b"});
      for (size_t m = 0; m < 2; ++m) mixed[m] += out.probability * cond[m].probability;
    }
    for (size_t m = 0; m < 2; ++m) {
      CHECK(std::abs(mixed[m] - direct[m].probability) < 1e-12);
    }
  }
}

TEST_CASE("basis labels must match the targets in order") {
  Rng rng(13);
  const StateVector s = random_state({"x", "y"}, rng);
  CHECK_THROWS_AS(outcome_distribution(s, bell_basis("x", "y"), {"y", "x"}), LabelMismatch);
  CHECK_THROWS_AS(outcome_distribution(s, bell_basis("x", "z"), {"x", "y"}), LabelMismatch);
  const StateVector s3 = random_state({"x", "y", "z"}, rng);
  CHECK_THROWS_AS(outcome_distribution(s3, bell_basis("x", "y"), {"x"}), LabelMismatch);
}

TEST_CASE("incomplete bases report the leftover weight") {
  const OrthonormalBasis sub = subspace_basis_8();
  const StateVector probe =
      StateVector::basis_state({"A3", "A4", "B1", "B2"}, 1);
  const auto dist = outcome_distribution(probe, sub, sub.labels());
  REQUIRE(dist.size() == 9);
  double projected = 0.0;
  for (size_t m = 0; m < 8; ++m) projected += dist[m].probability;
  const auto& rem = dist.back();
  CHECK(rem.index == MeasurementOutcome::kRemainder);
  CHECK_FALSE(rem.post_state.has_value());
  // Exactly half of this probe lies outside the eight-member span.
  CHECK(rem.probability == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(projected + rem.probability == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(sample_outcome(probe, sub, sub.labels(), 99), IncompleteBasisSample);
  // States inside the span sample fine.
  CHECK_NOTHROW(sample_outcome(chi_state(), sub, sub.labels(), 99));
}

TEST_CASE("sampling is deterministic in the seed") {
  Rng rng(17);
  const StateVector s = random_state({"p", "q"}, rng);
  const OrthonormalBasis basis = bell_basis("p", "q");
  for (std::uint64_t seed : {0ull, 1ull, 42ull, 1ull << 40}) {
    const auto a = sample_outcome(s, basis, {"p", "q"}, seed);
    const auto b = sample_outcome(s, basis, {"p", "q"}, seed);
    CHECK(a.index == b.index);
    CHECK(a.probability == b.probability);
  }
}

TEST_CASE("sampled frequencies track the exact distribution") {
  const double r = 1.0 / std::sqrt(2.0);
  const StateVector pair({"a", "b"}, {r, 0.0, 0.0, r});
  const OrthonormalBasis basis = computational_basis({"a"});
  const int n = 4000;
  int zeros = 0;
  for (int k = 0; k < n; ++k) {
    if (sample_outcome(pair, basis, {"a"}, static_cast<std::uint64_t>(k)).index == 0) ++zeros;
  }
  // 4 sigma around p = 1/2.
  const double bound = 4.0 * std::sqrt(0.25 / n);
  CHECK(std::abs(static_cast<double>(zeros) / n - 0.5) < bound);
}

TEST_CASE("zero-probability outcomes carry no conditional state") {
  const StateVector s = tensor_product(StateVector::basis_state({"a", "b"}, 0),
                                       StateVector::basis_state({"c"}, 0));
  const auto dist = outcome_distribution(s, bell_basis("a", "b"), {"a", "b"});
  CHECK(dist[0].probability == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(dist[3].probability == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(dist[1].probability < tol::kZeroProbability);
  CHECK(dist[2].probability < tol::kZeroProbability);
  CHECK_FALSE(dist[1].post_state.has_value());
  CHECK_FALSE(dist[2].post_state.has_value());
  CHECK(dist[0].post_state.has_value());
}
