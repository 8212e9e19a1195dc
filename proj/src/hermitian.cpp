// Copyright (c) 2026 chi4 contributors
// SPDX-License-Identifier: Apache-2.0

#include "chi4/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace chi4 {

namespace {

double off_diagonal_norm(const CMatrix& a) {
  double sum = 0.0;
  for (size_t i = 0; i < a.rows; ++i) {
    for (size_t j = 0; j < a.cols; ++j) {
      if (i != j) sum += std::norm(a.at(i, j));
    }
  }
  return std::sqrt(sum);
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const CMatrix& a, double off_tol) {
  if (!a.is_square() || a.rows == 0) {
    throw DomainError("hermitian_eigenvalues: matrix must be square and non-empty");
  }
  const size_t n = a.rows;
  if (n == 1) return {a.at(0, 0).real()};

  // Work on the Hermitian part; roundoff-sized asymmetry in the input would
  // otherwise leak into the rotations.
  CMatrix w(n, n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      w.at(i, j) = 0.5 * (a.at(i, j) + std::conj(a.at(j, i)));
    }
  }

  constexpr int kMaxSweeps = 100;
  int sweep = 0;
  while (off_diagonal_norm(w) >= off_tol) {
    if (++sweep > kMaxSweeps) {
      throw DomainError("hermitian_eigenvalues: Jacobi sweep limit exceeded");
    }
    for (size_t p = 0; p + 1 < n; ++p) {
      for (size_t q = p + 1; q < n; ++q) {
        const cplx apq = w.at(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;

        // Unitary plane rotation V: V(p,p)=c, V(p,q)=-s*u, V(q,p)=s*conj(u),
        // V(q,q)=c with u = apq/|apq| zeroes w(p,q) after w <- V^H w V.
        const cplx u = apq / mag;
        const double tau = (w.at(q, q).real() - w.at(p, p).real()) / (2.0 * mag);
        // Smaller-magnitude root of t^2 - 2*tau*t - 1 = 0; the limit form
        // avoids overflow in tau*tau.
        double t;
        if (std::abs(tau) > 1e10) {
          t = -1.0 / (2.0 * tau);
        } else {
          const double sg = (tau >= 0.0) ? 1.0 : -1.0;
          t = -sg / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const cplx su = s * u;
        const cplx suc = s * std::conj(u);

        for (size_t k = 0; k < n; ++k) {  // w <- w V
          const cplx wkp = w.at(k, p);
          const cplx wkq = w.at(k, q);
          w.at(k, p) = c * wkp + suc * wkq;
          w.at(k, q) = c * wkq - su * wkp;
        }
        for (size_t k = 0; k < n; ++k) {  // w <- V^H w
          const cplx wpk = w.at(p, k);
          const cplx wqk = w.at(q, k);
          w.at(p, k) = c * wpk + su * wqk;
          w.at(q, k) = c * wqk - suc * wpk;
        }
        w.at(p, q) = 0.0;
        w.at(q, p) = 0.0;
        w.at(p, p) = w.at(p, p).real();
        w.at(q, q) = w.at(q, q).real();
      }
    }
  }

  std::vector<double> eigs(n);
  for (size_t i = 0; i < n; ++i) eigs[i] = w.at(i, i).real();
  std::sort(eigs.begin(), eigs.end());
  return eigs;
}

}  // namespace chi4
