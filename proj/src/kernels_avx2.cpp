// Copyright (c) 2026 chi4 contributors
// SPDX-License-Identifier: Apache-2.0

// AVX2+FMA variants of the complex vector kernels.  This translation unit is
// compiled with -mavx2 -mfma; callers reach it only through the runtime
// dispatch in kernels.cpp after a CPU support check.

#include "chi4/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace chi4::kernels {

namespace {

// Register layout: one __m256d holds two complex doubles [re0 im0 re1 im1].

// conj(a) * b, elementwise over two complex lanes
inline __m256d cmul_conj_a(__m256d a, __m256d b) {
    const __m256d are = _mm256_movedup_pd(a);          // [re re]
    const __m256d aim = _mm256_permute_pd(a, 0b1111);  // [im im]
    const __m256d bsw = _mm256_permute_pd(b, 0b0101);  // [im re]
    // even lane: are*bre + aim*bim, odd lane: are*bim - aim*bre
    return _mm256_fmsubadd_pd(are, b, _mm256_mul_pd(aim, bsw));
}

// alpha * x with alpha pre-split into broadcast real/imag parts
inline __m256d cmul_scalar(__m256d ar, __m256d ai, __m256d x) {
    const __m256d xsw = _mm256_permute_pd(x, 0b0101);
    // even: ar*xr - ai*xi, odd: ar*xi + ai*xr
    return _mm256_fmaddsub_pd(ar, x, _mm256_mul_pd(ai, xsw));
}

// alpha * conj(x)
inline __m256d cmul_scalar_conj(__m256d ar, __m256d ai, __m256d x) {
    const __m256d xsw = _mm256_permute_pd(x, 0b0101);
    // even: ai*xi + ar*xr, odd: ai*xr - ar*xi
    return _mm256_fmsubadd_pd(ai, xsw, _mm256_mul_pd(ar, x));
}

cplx avx2_cdot(const cplx* a, const cplx* b, std::size_t n) {
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        acc = _mm256_add_pd(acc, cmul_conj_a(_mm256_loadu_pd(pa + 2 * i), _mm256_loadu_pd(pb + 2 * i)));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    cplx result{lanes[0] + lanes[2], lanes[1] + lanes[3]};
    for (; i < n; ++i) result += std::conj(a[i]) * b[i];
    return result;
}

void avx2_caxpy(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
    const double* px = reinterpret_cast<const double*>(x);
    double* py = reinterpret_cast<double*>(y);
    const __m256d ar = _mm256_set1_pd(alpha.real());
    const __m256d ai = _mm256_set1_pd(alpha.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d prod = cmul_scalar(ar, ai, _mm256_loadu_pd(px + 2 * i));
        _mm256_storeu_pd(py + 2 * i, _mm256_add_pd(_mm256_loadu_pd(py + 2 * i), prod));
    }
    for (; i < n; ++i) y[i] += alpha * x[i];
}

void avx2_caxpy_conj(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
    const double* px = reinterpret_cast<const double*>(x);
    double* py = reinterpret_cast<double*>(y);
    const __m256d ar = _mm256_set1_pd(alpha.real());
    const __m256d ai = _mm256_set1_pd(alpha.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d prod = cmul_scalar_conj(ar, ai, _mm256_loadu_pd(px + 2 * i));
        _mm256_storeu_pd(py + 2 * i, _mm256_add_pd(_mm256_loadu_pd(py + 2 * i), prod));
    }
    for (; i < n; ++i) y[i] += alpha * std::conj(x[i]);
}

void avx2_cscale(cplx alpha, cplx* x, std::size_t n) {
    double* px = reinterpret_cast<double*>(x);
    const __m256d ar = _mm256_set1_pd(alpha.real());
    const __m256d ai = _mm256_set1_pd(alpha.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        _mm256_storeu_pd(px + 2 * i, cmul_scalar(ar, ai, _mm256_loadu_pd(px + 2 * i)));
    }
    for (; i < n; ++i) x[i] *= alpha;
}

double avx2_norm_sq(const cplx* a, std::size_t n) {
    const double* pa = reinterpret_cast<const double*>(a);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d v = _mm256_loadu_pd(pa + 2 * i);
        acc = _mm256_fmadd_pd(v, v, acc);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double result = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < n; ++i) result += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
    return result;
}

void avx2_rank1_accum(cplx w, const cplx* v, cplx* m, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) avx2_caxpy_conj(w * v[i], v, m + i * n, n);
}

constexpr Ops kAvx2Ops{avx2_cdot,   avx2_caxpy,   avx2_caxpy_conj,
                       avx2_cscale, avx2_norm_sq, avx2_rank1_accum};

}  // namespace

const Ops& avx2_ops() { return kAvx2Ops; }

}  // namespace chi4::kernels

#endif  // x86-64
