// Copyright (c) 2026 chi4 contributors
// SPDX-License-Identifier: Apache-2.0

#include "chi4/measurement.hpp"

#include <algorithm>
#include <cmath>

#include "chi4/kernels.hpp"
#include "chi4/rng.hpp"

namespace chi4 {

std::vector<MeasurementOutcome> outcome_distribution(const StateVector& s,
                                                     const OrthonormalBasis& basis,
                                                     const std::vector<std::string>& targets) {
  if (basis.labels() != targets) {
    throw LabelMismatch("basis must live on exactly the measurement targets");
  }
  const std::vector<size_t> target_pos = label_positions(s.labels(), targets);
  const size_t n = s.n_qubits();
  const size_t k = targets.size();
  const size_t dk = size_t{1} << k;

  std::vector<size_t> rest_pos;
  std::vector<std::string> rest_labels;
  {
    std::vector<bool> measured(n, false);
    for (size_t p : target_pos) measured[p] = true;
    for (size_t p = 0; p < n; ++p) {
      if (!measured[p]) {
        rest_pos.push_back(p);
        rest_labels.push_back(s.labels()[p]);
      }
    }
  }
  const size_t dr = size_t{1} << rest_pos.size();

  // coeff[m*dr + r] = <e_m| s with the unmeasured bits fixed to r.
  std::vector<cplx> coeff(basis.size() * dr);
  std::vector<cplx> slice(dk);
  for (size_t r = 0; r < dr; ++r) {
    size_t base = 0;
    for (size_t t = 0; t < rest_pos.size(); ++t) {
      base |= ((r >> (rest_pos.size() - 1 - t)) & 1u) << (n - 1 - rest_pos[t]);
    }
    for (size_t m = 0; m < dk; ++m) {
      size_t idx = base;
      for (size_t t = 0; t < k; ++t) {
        idx |= ((m >> (k - 1 - t)) & 1u) << (n - 1 - target_pos[t]);
      }
      slice[m] = s.amplitudes()[idx];
    }
    for (size_t b = 0; b < basis.size(); ++b) {
      coeff[b * dr + r] =
          kernels::active().cdot(basis.state(b).amplitudes().data(), slice.data(), dk);
    }
  }

  std::vector<MeasurementOutcome> outcomes;
  outcomes.reserve(basis.size() + 1);
  double total = 0.0;
  for (size_t b = 0; b < basis.size(); ++b) {
    const double p = kernels::active().norm_sq(coeff.data() + b * dr, dr);
    total += p;
    MeasurementOutcome out;
    out.basis_name = basis.name();
    out.index = static_cast<int>(b);
    out.probability = p;
    if (p > tol::kZeroProbability && !rest_labels.empty()) {
      std::vector<cplx> post(coeff.begin() + static_cast<long>(b * dr),
                             coeff.begin() + static_cast<long>((b + 1) * dr));
      kernels::active().cscale(1.0 / std::sqrt(p), post.data(), dr);
      out.post_state = StateVector(rest_labels, std::move(post));
    }
    outcomes.push_back(std::move(out));
  }

  if (!basis.complete()) {
    MeasurementOutcome rem;
    rem.basis_name = basis.name();
    rem.index = MeasurementOutcome::kRemainder;
    rem.probability = std::max(0.0, 1.0 - total);
    outcomes.push_back(std::move(rem));
  }
  return outcomes;
}

MeasurementOutcome sample_outcome(const StateVector& s, const OrthonormalBasis& basis,
                                  const std::vector<std::string>& targets, std::uint64_t seed) {
  std::vector<MeasurementOutcome> dist = outcome_distribution(s, basis, targets);
  if (!basis.complete()) {
    const double deficit = dist.back().probability;
    if (deficit > 1e-9) {
      throw IncompleteBasisSample("state has unprojected weight " + std::to_string(deficit));
    }
    dist.pop_back();
  }
  Rng rng(seed);
  const double u = rng.uniform01();
  double cum = 0.0;
  const MeasurementOutcome* last_nonzero = nullptr;
  for (const auto& out : dist) {
    if (out.probability > 0.0) last_nonzero = &out;
    cum += out.probability;
    if (u < cum && out.probability > 0.0) return out;
  }
  if (last_nonzero == nullptr) throw DomainError("no outcome has positive probability");
  return *last_nonzero;
}

}  // namespace chi4
