// Copyright (c) 2026 chi4 contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "chi4/types.hpp"

namespace chi4 {

// Eigenvalues of a Hermitian matrix via cyclic complex Jacobi rotations,
// returned in ascending order.  Iteration stops once the off-diagonal
// Frobenius norm drops below off_tol.
std::vector<double> hermitian_eigenvalues(const CMatrix& a, double off_tol = 1e-12);

}  // namespace chi4
