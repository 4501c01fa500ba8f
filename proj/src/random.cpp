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

#include "qstate/random.hpp"

#include <cmath>
#include <numbers>

#include "qstate/kernels.hpp"

namespace qstate {

double Rng::uniform() {
    // 53 random bits -> [0, 1)
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

cplx Rng::normal_cplx() {
    const double re = normal();
    const double im = normal();
    return {re, im};
}

std::size_t Rng::pick_index(std::size_t n) {
    return static_cast<std::size_t>(engine_() % n);
}

RawVector random_raw_vector(Rng& rng, const HilbertStructure& structure) {
    std::vector<cplx> amps(structure.total_dim());
    for (cplx& a : amps)
        a = rng.normal_cplx();
    return {structure, std::move(amps)};
}

StateVector random_pure_state(Rng& rng, const HilbertStructure& structure) {
    while (true) {
        RawVector raw = random_raw_vector(rng, structure);
        if (raw.norm() > 1e-6)  // essentially never retries
            return normalized(raw);
    }
}

std::vector<double> random_simplex_weights(Rng& rng, std::size_t n) {
    std::vector<double> w(n);
    double total = 0.0;
    for (double& x : w) {
        x = -std::log(1.0 - rng.uniform());
        total += x;
    }
    for (double& x : w)
        x /= total;
    return w;
}

DensityOperator random_mixed_state(Rng& rng, const HilbertStructure& structure) {
    const std::size_t terms = 2 + rng.pick_index(3);
    const std::vector<double> weights = random_simplex_weights(rng, terms);
    CMatrix rho(structure.total_dim(), structure.total_dim());
    for (std::size_t t = 0; t < terms; ++t) {
        const StateVector psi = random_pure_state(rng, structure);
        for (std::size_t i = 0; i < rho.rows(); ++i)
            kernels::axpy_conj(weights[t] * psi.amplitudes[i], psi.amplitudes.data(),
                               rho.row(i), rho.cols());
    }
    return {structure, std::move(rho)};
}

namespace {

// Orthonormal columns via modified Gram-Schmidt over complex-normal draws.
std::vector<std::vector<cplx>> orthonormal_set(Rng& rng, std::size_t dim, std::size_t count) {
    std::vector<std::vector<cplx>> vecs;
    vecs.reserve(count);
    while (vecs.size() < count) {
        std::vector<cplx> v(dim);
        for (cplx& a : v)
            a = rng.normal_cplx();
        for (const auto& u : vecs) {
            const cplx overlap = kernels::dot_conj(u.data(), v.data(), dim);
            kernels::axpy(-overlap, u.data(), v.data(), dim);
        }
        const double n = std::sqrt(kernels::norm_sq(v.data(), dim));
        if (n < 1e-8)  // degenerate draw, try again
            continue;
        kernels::scale(1.0 / n, v.data(), dim);
        vecs.push_back(std::move(v));
    }
    return vecs;
}

}  // namespace

CMatrix random_projector(Rng& rng, std::size_t dim, std::size_t rank) {
    if (rank == 0 || rank > dim)
        throw Error(ErrorKind::invalid_argument, "projector rank must be in [1, dim]");
    const auto basis = orthonormal_set(rng, dim, rank);
    CMatrix p(dim, dim);
    for (const auto& v : basis)
        for (std::size_t i = 0; i < dim; ++i)
            kernels::axpy_conj(v[i], v.data(), p.row(i), dim);
    return p;
}

CMatrix random_unitary(Rng& rng, std::size_t dim) {
    const auto columns = orthonormal_set(rng, dim, dim);
    CMatrix u(dim, dim);
    for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t i = 0; i < dim; ++i)
            u(i, j) = columns[j][i];
    return u;
}

}  // namespace qstate
