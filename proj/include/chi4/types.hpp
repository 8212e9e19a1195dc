// Copyright (c) 2026 chi4 contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace chi4 {

using cplx = std::complex<double>;

// Tolerances shared across the library.  Invariant checks (norms, Hermiticity,
// orthonormality) use kInvariant; identities that hold exactly in exact
// arithmetic are held to kAlgebraic.
namespace tol {
inline constexpr double kInvariant = 1e-10;
inline constexpr double kAlgebraic = 1e-12;
inline constexpr double kEntropyCutoff = 1e-12;
inline constexpr double kCorrection = 1e-9;
inline constexpr double kRank = 1e-10;
inline constexpr double kAngleGap = 1e-9;
inline constexpr double kZeroProbability = 1e-12;
}  // namespace tol

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two tensor factors sharing a particle name.
struct LabelCollision : Error {
    using Error::Error;
};
// Unknown particle name, or registers that should coincide but do not.
struct LabelMismatch : Error {
    using Error::Error;
};
// Vector/matrix size disagreement.
struct DimensionMismatch : Error {
    using Error::Error;
};
// Out-of-range parameter or violated state invariant.
struct DomainError : Error {
    using Error::Error;
};
// Sampling request against a basis that does not exhaust the state's support.
struct IncompleteBasisSample : Error {
    using Error::Error;
};

// Dense row-major complex matrix.
struct CMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<cplx> data;

    CMatrix() = default;
    CMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

    static CMatrix identity(std::size_t n) {
        CMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
        return m;
    }

    cplx& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const cplx& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    bool is_square() const { return rows == cols; }

    cplx trace() const {
        cplx t = 0.0;
        for (std::size_t i = 0; i < rows && i < cols; ++i) t += at(i, i);
        return t;
    }

    CMatrix dagger() const {
        CMatrix m(cols, rows);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m.at(j, i) = std::conj(at(i, j));
        return m;
    }

    CMatrix operator*(const CMatrix& o) const {
        if (cols != o.rows) throw DimensionMismatch("matrix product shape mismatch");
        CMatrix m(rows, o.cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t k = 0; k < cols; ++k) {
                const cplx v = at(i, k);
                if (v == cplx{}) continue;
                for (std::size_t j = 0; j < o.cols; ++j) m.at(i, j) += v * o.at(k, j);
            }
        return m;
    }

    // max_ij |a_ij - conj(a_ji)|, zero for an exactly Hermitian matrix
    double hermiticity_defect() const {
        double d = 0.0;
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                d = std::max(d, std::abs(at(i, j) - std::conj(at(j, i))));
        return d;
    }

    double max_abs_diff(const CMatrix& o) const {
        double d = 0.0;
        for (std::size_t i = 0; i < data.size(); ++i) d = std::max(d, std::abs(data[i] - o.data[i]));
        return d;
    }
};

}  // namespace chi4
