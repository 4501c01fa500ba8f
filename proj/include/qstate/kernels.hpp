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

#pragma once

#include <complex>
#include <cstddef>

// Complex double-precision primitives behind all state/operator arithmetic.
// Each primitive has a scalar reference implementation and an AVX2+FMA
// variant; the unqualified entry points dispatch once, at first use, based
// on what the CPU supports. QSTATE_KERNEL=scalar|avx2 in the environment
// forces a backend. The two backends are equivalence-tested against each
// other on random inputs.

namespace qstate::kernels {

using cplx = std::complex<double>;

// sum_i |x_i|^2
double norm_sq(const cplx* x, std::size_t n);
// sum_i a_i * b_i
cplx dot(const cplx* a, const cplx* b, std::size_t n);
// sum_i conj(a_i) * b_i
cplx dot_conj(const cplx* a, const cplx* b, std::size_t n);
// y_i += alpha * x_i
void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n);
// y_i += alpha * conj(x_i)
void axpy_conj(cplx alpha, const cplx* x, cplx* y, std::size_t n);
// x_i *= alpha
void scale(cplx alpha, cplx* x, std::size_t n);

// True when the AVX2 variants were compiled in and the CPU supports them.
bool avx2_available();
// Name of the backend the dispatched entry points resolve to.
const char* backend_name();

namespace scalar {
double norm_sq(const cplx* x, std::size_t n);
cplx dot(const cplx* a, const cplx* b, std::size_t n);
cplx dot_conj(const cplx* a, const cplx* b, std::size_t n);
void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n);
void axpy_conj(cplx alpha, const cplx* x, cplx* y, std::size_t n);
void scale(cplx alpha, cplx* x, std::size_t n);
}  // namespace scalar

// On non-x86 builds these forward to the scalar reference; avx2_available()
// reports whether they are the real thing.
namespace avx2 {
double norm_sq(const cplx* x, std::size_t n);
cplx dot(const cplx* a, const cplx* b, std::size_t n);
cplx dot_conj(const cplx* a, const cplx* b, std::size_t n);
void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n);
void axpy_conj(cplx alpha, const cplx* x, cplx* y, std::size_t n);
void scale(cplx alpha, cplx* x, std::size_t n);
}  // namespace avx2

}  // namespace qstate::kernels
