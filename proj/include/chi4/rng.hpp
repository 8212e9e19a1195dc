// Copyright (c) 2026 chi4 contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "chi4/qstate.hpp"
#include "chi4/types.hpp"

namespace chi4 {

// Deterministic random source.  Draws are mapped from raw mt19937_64 output
// with fixed arithmetic so that sequences are identical across compilers.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t raw() { return gen_(); }
  // Uniform on [0, 1) with 53-bit resolution.
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  double gaussian();
  cplx complex_gaussian();

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Stream-splitting hash; distinct streams from one seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

// Haar-distributed pure state on the given register.
StateVector random_state(std::vector<std::string> labels, Rng& rng);

}  // namespace chi4
