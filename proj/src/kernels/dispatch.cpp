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

// Runtime backend selection. Resolved once; QSTATE_KERNEL=scalar|avx2
// overrides the CPU probe (avx2 is honored only when actually usable).

#include "qstate/kernels.hpp"

#include <cstdlib>
#include <cstring>

#include "backend_detail.hpp"

namespace qstate::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

bool resolve_use_avx2() {
    const bool usable = detail::avx2_compiled() && cpu_has_avx2();
    if (const char* env = std::getenv("QSTATE_KERNEL")) {
        if (std::strcmp(env, "scalar") == 0)
            return false;
        if (std::strcmp(env, "avx2") == 0)
            return usable;
    }
    return usable;
}

bool use_avx2() {
    static const bool value = resolve_use_avx2();
    return value;
}

}  // namespace

bool avx2_available() {
    return detail::avx2_compiled() && cpu_has_avx2();
}

const char* backend_name() {
    return use_avx2() ? "avx2" : "scalar";
}

double norm_sq(const cplx* x, std::size_t n) {
    return use_avx2() ? avx2::norm_sq(x, n) : scalar::norm_sq(x, n);
}

cplx dot(const cplx* a, const cplx* b, std::size_t n) {
    return use_avx2() ? avx2::dot(a, b, n) : scalar::dot(a, b, n);
}

cplx dot_conj(const cplx* a, const cplx* b, std::size_t n) {
    return use_avx2() ? avx2::dot_conj(a, b, n) : scalar::dot_conj(a, b, n);
}

void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
    use_avx2() ? avx2::axpy(alpha, x, y, n) : scalar::axpy(alpha, x, y, n);
}

void axpy_conj(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
    use_avx2() ? avx2::axpy_conj(alpha, x, y, n) : scalar::axpy_conj(alpha, x, y, n);
}

void scale(cplx alpha, cplx* x, std::size_t n) {
    use_avx2() ? avx2::scale(alpha, x, n) : scalar::scale(alpha, x, n);
}

}  // namespace qstate::kernels
