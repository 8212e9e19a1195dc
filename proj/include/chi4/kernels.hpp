// Copyright (c) 2026 chi4 contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>

#include "chi4/types.hpp"

namespace chi4::kernels {

// Complex double-precision vector primitives behind all state and operator
// arithmetic.  A scalar reference implementation always exists; on x86-64 an
// AVX2+FMA variant is selected at startup when the CPU supports it.  Backends
// are interchangeable and equivalence-tested against each other.
enum class Backend { kScalar, kAvx2 };

struct Ops {
    // sum_i conj(a[i]) * b[i]
    cplx (*cdot)(const cplx* a, const cplx* b, std::size_t n);
    // y[i] += alpha * x[i]
    void (*caxpy)(cplx alpha, const cplx* x, cplx* y, std::size_t n);
    // y[i] += alpha * conj(x[i])
    void (*caxpy_conj)(cplx alpha, const cplx* x, cplx* y, std::size_t n);
    // x[i] *= alpha
    void (*cscale)(cplx alpha, cplx* x, std::size_t n);
    // sum_i |a[i]|^2
    double (*norm_sq)(const cplx* a, std::size_t n);
    // m[i*n + j] += w * v[i] * conj(v[j])   (row-major n x n accumulation)
    void (*rank1_accum)(cplx w, const cplx* v, cplx* m, std::size_t n);
};

const Ops& scalar_ops();
#if defined(__x86_64__) || defined(_M_X64)
const Ops& avx2_ops();
#endif

bool backend_supported(Backend b);
Backend active_backend();
// Throws DomainError when the requested backend is not supported on this CPU.
void select_backend(Backend b);
const Ops& active();

}  // namespace chi4::kernels
