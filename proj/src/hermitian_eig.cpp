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

#include "qstate/hermitian_eig.hpp"

#include <algorithm>
#include <cmath>

namespace qstate {

namespace {

// One two-sided rotation A <- J^dagger A J chosen to zero A(p, q).
// Writing A(p,q) = |g| e^{i alpha}, the phase diag(1, e^{-i alpha}) reduces
// the 2x2 pivot block to a real symmetric one, which a standard Jacobi
// rotation diagonalizes.
void rotate(CMatrix& a, std::size_t p, std::size_t q) {
    const cplx apq = a(p, q);
    const double g = std::abs(apq);
    if (g == 0.0)
        return;
    const cplx phase = apq / g;  // e^{i alpha}

    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double theta = (aqq - app) / (2.0 * g);
    const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::hypot(theta, 1.0));
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;

    // Column update A <- A J with J = [[c, -s], [s e^{-ia}, c e^{-ia}]]
    const cplx conj_phase = std::conj(phase);
    const std::size_t n = a.rows();
    for (std::size_t r = 0; r < n; ++r) {
        const cplx arp = a(r, p);
        const cplx arq = a(r, q);
        a(r, p) = arp * c + arq * (s * conj_phase);
        a(r, q) = arp * (-s) + arq * (c * conj_phase);
    }
    // Row update A <- J^dagger A
    for (std::size_t r = 0; r < n; ++r) {
        const cplx apr = a(p, r);
        const cplx aqr = a(q, r);
        a(p, r) = apr * c + aqr * (s * phase);
        a(q, r) = apr * (-s) + aqr * (c * phase);
    }
}

double max_off_diagonal(const CMatrix& a) {
    double out = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i + 1; j < a.cols(); ++j)
            out = std::max(out, std::abs(a(i, j)));
    return out;
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const CMatrix& input) {
    if (!input.is_square())
        throw Error(ErrorKind::invalid_argument, "eigenvalues need a square matrix");
    const std::size_t n = input.rows();
    if (n == 0)
        return {};

    // Work on the Hermitian part.
    CMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a(i, j) = 0.5 * (input(i, j) + std::conj(input(j, i)));

    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        scale = std::max(scale, std::abs(a(i, i)));
    scale = std::max(scale, max_off_diagonal(a));
    const double stop = 1e-14 * std::max(scale, 1.0);

    constexpr int kMaxSweeps = 60;
    for (int sweep = 0; sweep < kMaxSweeps && max_off_diagonal(a) > stop; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                if (std::abs(a(p, q)) > stop / (double)(n * n))
                    rotate(a, p, q);
    }

    std::vector<double> evs(n);
    for (std::size_t i = 0; i < n; ++i)
        evs[i] = a(i, i).real();
    std::sort(evs.begin(), evs.end());
    return evs;
}

}  // namespace qstate
