// Copyright 2026 The qstate Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// AVX2+FMA kernels over interleaved complex doubles. One __m256d holds two
// complex values [x0.re, x0.im, x1.re, x1.im]; the in-pair swap
// _mm256_permute_pd(v, 0b0101) and _mm256_fmaddsub_pd implement the complex
// product. Accumulation order differs from the scalar reference, so results
// agree to rounding, not bit-for-bit.

#include "qstate/kernels.hpp"

#include "backend_detail.hpp"

#if defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

namespace {

// [x0.re, x0.im, x1.re, x1.im] -> [x0.im, x0.re, x1.im, x1.re]
inline __m256d swap_pairs(__m256d v) {
    return _mm256_permute_pd(v, 0b0101);
}

inline double hsum(__m256d v) {
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, v);
    return (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
}

// (lanes0 - lanes1) + (lanes2 - lanes3)
inline double hsum_evens_minus_odds(__m256d v) {
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, v);
    return (lanes[0] - lanes[1]) + (lanes[2] - lanes[3]);
}

}  // namespace

namespace qstate::kernels::avx2 {

double norm_sq(const cplx* x, std::size_t n) {
    const double* p = reinterpret_cast<const double*>(x);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2, p += 4) {
        __m256d v = _mm256_loadu_pd(p);
        acc = _mm256_fmadd_pd(v, v, acc);
    }
    double out = hsum(acc);
    for (; i < n; ++i)
        out += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
    return out;
}

cplx dot(const cplx* a, const cplx* b, std::size_t n) {
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    // acc1 lanes: (ar*br, ai*bi); acc2 lanes: (ar*bi, ai*br)
    __m256d acc1 = _mm256_setzero_pd();
    __m256d acc2 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2, pa += 4, pb += 4) {
        __m256d va = _mm256_loadu_pd(pa);
        __m256d vb = _mm256_loadu_pd(pb);
        acc1 = _mm256_fmadd_pd(va, vb, acc1);
        acc2 = _mm256_fmadd_pd(va, swap_pairs(vb), acc2);
    }
    double re = hsum_evens_minus_odds(acc1);
    double im = hsum(acc2);
    for (; i < n; ++i) {
        re += a[i].real() * b[i].real() - a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() + a[i].imag() * b[i].real();
    }
    return {re, im};
}

cplx dot_conj(const cplx* a, const cplx* b, std::size_t n) {
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    __m256d acc1 = _mm256_setzero_pd();
    __m256d acc2 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2, pa += 4, pb += 4) {
        __m256d va = _mm256_loadu_pd(pa);
        __m256d vb = _mm256_loadu_pd(pb);
        acc1 = _mm256_fmadd_pd(va, vb, acc1);
        acc2 = _mm256_fmadd_pd(va, swap_pairs(vb), acc2);
    }
    double re = hsum(acc1);
    double im = hsum_evens_minus_odds(acc2);
    for (; i < n; ++i) {
        re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
    }
    return {re, im};
}

void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
    const double* px = reinterpret_cast<const double*>(x);
    double* py = reinterpret_cast<double*>(y);
    const __m256d ar = _mm256_set1_pd(alpha.real());
    const __m256d ai = _mm256_set1_pd(alpha.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2, px += 4, py += 4) {
        __m256d vx = _mm256_loadu_pd(px);
        // even: xr*ar - xi*ai, odd: xi*ar + xr*ai
        __m256d prod = _mm256_fmaddsub_pd(vx, ar, _mm256_mul_pd(swap_pairs(vx), ai));
        _mm256_storeu_pd(py, _mm256_add_pd(_mm256_loadu_pd(py), prod));
    }
    for (; i < n; ++i)
        y[i] += alpha * x[i];
}

void axpy_conj(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
    const double* px = reinterpret_cast<const double*>(x);
    double* py = reinterpret_cast<double*>(y);
    const __m256d ar = _mm256_set1_pd(alpha.real());
    const __m256d ai = _mm256_set1_pd(alpha.imag());
    const __m256d conj_mask = _mm256_setr_pd(0.0, -0.0, 0.0, -0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2, px += 4, py += 4) {
        __m256d vx = _mm256_xor_pd(_mm256_loadu_pd(px), conj_mask);
        __m256d prod = _mm256_fmaddsub_pd(vx, ar, _mm256_mul_pd(swap_pairs(vx), ai));
        _mm256_storeu_pd(py, _mm256_add_pd(_mm256_loadu_pd(py), prod));
    }
    for (; i < n; ++i)
        y[i] += alpha * std::conj(x[i]);
}

void scale(cplx alpha, cplx* x, std::size_t n) {
    double* px = reinterpret_cast<double*>(x);
    const __m256d ar = _mm256_set1_pd(alpha.real());
    const __m256d ai = _mm256_set1_pd(alpha.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2, px += 4) {
        __m256d vx = _mm256_loadu_pd(px);
        _mm256_storeu_pd(px, _mm256_fmaddsub_pd(vx, ar, _mm256_mul_pd(swap_pairs(vx), ai)));
    }
    for (; i < n; ++i)
        x[i] *= alpha;
}

}  // namespace qstate::kernels::avx2

namespace qstate::kernels::detail {
bool avx2_compiled() noexcept { return true; }
}

#else  // no AVX2 at compile time: forward to the scalar reference

namespace qstate::kernels::avx2 {

double norm_sq(const cplx* x, std::size_t n) { return scalar::norm_sq(x, n); }
cplx dot(const cplx* a, const cplx* b, std::size_t n) { return scalar::dot(a, b, n); }
cplx dot_conj(const cplx* a, const cplx* b, std::size_t n) { return scalar::dot_conj(a, b, n); }
void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n) { scalar::axpy(alpha, x, y, n); }
void axpy_conj(cplx alpha, const cplx* x, cplx* y, std::size_t n) { scalar::axpy_conj(alpha, x, y, n); }
void scale(cplx alpha, cplx* x, std::size_t n) { scalar::scale(alpha, x, n); }

}  // namespace qstate::kernels::avx2

namespace qstate::kernels::detail {
bool avx2_compiled() noexcept { return false; }
}

#endif
