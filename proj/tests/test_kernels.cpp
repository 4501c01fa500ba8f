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

#include <doctest.h>

#include <complex>
#include <vector>

#include "qstate/kernels.hpp"
#include "qstate/random.hpp"

using qstate::Rng;
using qstate::cplx;
namespace kernels = qstate::kernels;

namespace {

std::vector<cplx> random_vec(Rng& rng, std::size_t n) {
    std::vector<cplx> v(n);
    for (cplx& x : v)
        x = rng.normal_cplx();
    return v;
}

double vec_dev(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

// Sizes straddling the vector width, plus odd tails and tiny cases.
const std::size_t kSizes[] = {0, 1, 2, 3, 4, 5, 7, 8, 15, 16, 33, 64, 129, 1024};

}  // namespace

TEST_SUITE_BEGIN("kernels");

TEST_CASE("scalar kernels match hand-computed values") {
    const std::vector<cplx> a{{1.0, 2.0}, {0.0, -1.0}};
    const std::vector<cplx> b{{3.0, 0.0}, {1.0, 1.0}};

    CHECK(kernels::scalar::norm_sq(a.data(), 2) == doctest::Approx(1 + 4 + 1));
    // (1+2i)(3) + (-i)(1+i) = 3+6i + (1-i) = 4+5i
    const cplx d = kernels::scalar::dot(a.data(), b.data(), 2);
    CHECK(d.real() == doctest::Approx(4.0));
    CHECK(d.imag() == doctest::Approx(5.0));
    // conj(1+2i)(3) + conj(-i)(1+i) = 3-6i + i(1+i) = 2-5i
    const cplx dc = kernels::scalar::dot_conj(a.data(), b.data(), 2);
    CHECK(dc.real() == doctest::Approx(2.0));
    CHECK(dc.imag() == doctest::Approx(-5.0));
}

TEST_CASE("avx2 variants agree with the scalar reference") {
    if (!kernels::avx2_available()) {
        MESSAGE("AVX2 not available; skipping backend equivalence");
        return;
    }
    Rng rng(20260810);
    for (std::size_t n : kSizes) {
        CAPTURE(n);
        const std::vector<cplx> a = random_vec(rng, n);
        const std::vector<cplx> b = random_vec(rng, n);
        const cplx alpha = rng.normal_cplx();
        const double tol = 1e-11 * static_cast<double>(n + 1);

        CHECK(std::abs(kernels::avx2::norm_sq(a.data(), n) -
                       kernels::scalar::norm_sq(a.data(), n)) <= tol);
        CHECK(std::abs(kernels::avx2::dot(a.data(), b.data(), n) -
                       kernels::scalar::dot(a.data(), b.data(), n)) <= tol);
        CHECK(std::abs(kernels::avx2::dot_conj(a.data(), b.data(), n) -
                       kernels::scalar::dot_conj(a.data(), b.data(), n)) <= tol);

        std::vector<cplx> y1 = random_vec(rng, n);
        std::vector<cplx> y2 = y1;
        kernels::scalar::axpy(alpha, a.data(), y1.data(), n);
        kernels::avx2::axpy(alpha, a.data(), y2.data(), n);
        CHECK(vec_dev(y1, y2) <= tol);

        y1 = y2 = b;
        kernels::scalar::axpy_conj(alpha, a.data(), y1.data(), n);
        kernels::avx2::axpy_conj(alpha, a.data(), y2.data(), n);
        CHECK(vec_dev(y1, y2) <= tol);

        std::vector<cplx> x1 = a;
        std::vector<cplx> x2 = a;
        kernels::scalar::scale(alpha, x1.data(), n);
        kernels::avx2::scale(alpha, x2.data(), n);
        CHECK(vec_dev(x1, x2) <= tol);
    }
}

TEST_CASE("unaligned slices behave like aligned ones") {
    if (!kernels::avx2_available())
        return;
    Rng rng(7);
    const std::vector<cplx> a = random_vec(rng, 65);
    const std::vector<cplx> b = random_vec(rng, 65);
    for (std::size_t offset : {1, 2, 3}) {
        const std::size_t n = 64 - offset;
        const cplx s = kernels::scalar::dot_conj(a.data() + offset, b.data() + offset, n);
        const cplx v = kernels::avx2::dot_conj(a.data() + offset, b.data() + offset, n);
        CHECK(std::abs(s - v) <= 1e-11);
    }
}

TEST_CASE("dispatched entry points resolve to a working backend") {
    const char* name = kernels::backend_name();
    CHECK((std::string(name) == "avx2" || std::string(name) == "scalar"));
    const std::vector<cplx> a{{3.0, 4.0}};
    CHECK(kernels::norm_sq(a.data(), 1) == doctest::Approx(25.0));
}

TEST_SUITE_END();
