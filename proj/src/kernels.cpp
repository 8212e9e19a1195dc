// Copyright (c) 2026 chi4 contributors
// SPDX-License-Identifier: Apache-2.0

#include "chi4/kernels.hpp"

namespace chi4::kernels {

namespace {

cplx scalar_cdot(const cplx* a, const cplx* b, std::size_t n) {
    cplx acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += std::conj(a[i]) * b[i];
    return acc;
}

void scalar_caxpy(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scalar_caxpy_conj(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * std::conj(x[i]);
}

void scalar_cscale(cplx alpha, cplx* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) x[i] *= alpha;
}

double scalar_norm_sq(const cplx* a, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
    return acc;
}

void scalar_rank1_accum(cplx w, const cplx* v, cplx* m, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const cplx wi = w * v[i];
        scalar_caxpy_conj(wi, v, m + i * n, n);
    }
}

constexpr Ops kScalarOps{scalar_cdot,   scalar_caxpy,   scalar_caxpy_conj,
                         scalar_cscale, scalar_norm_sq, scalar_rank1_accum};

struct Dispatch {
    const Ops* ops;
    Backend backend;
};

Dispatch detect() {
#if defined(__x86_64__) || defined(_M_X64)
    if (backend_supported(Backend::kAvx2)) return {&avx2_ops(), Backend::kAvx2};
#endif
    return {&kScalarOps, Backend::kScalar};
}

Dispatch& dispatch() {
    static Dispatch d = detect();
    return d;
}

}  // namespace

const Ops& scalar_ops() { return kScalarOps; }

bool backend_supported(Backend b) {
    if (b == Backend::kScalar) return true;
#if defined(__x86_64__) || defined(_M_X64)
    if (b == Backend::kAvx2)
        return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#endif
    return false;
}

Backend active_backend() { return dispatch().backend; }

void select_backend(Backend b) {
    if (!backend_supported(b)) throw DomainError("requested SIMD backend not supported on this CPU");
    if (b == Backend::kScalar) {
        dispatch() = {&kScalarOps, Backend::kScalar};
        return;
    }
#if defined(__x86_64__) || defined(_M_X64)
    dispatch() = {&avx2_ops(), Backend::kAvx2};
#endif
}

const Ops& active() { return *dispatch().ops; }

}  // namespace chi4::kernels
