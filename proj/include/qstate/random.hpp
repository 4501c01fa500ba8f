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

#include <cstdint>
#include <random>
#include <vector>

#include "qstate/types.hpp"

namespace qstate {

// Deterministic generator for random states, projectors and unitaries.
// Normal deviates are hand-rolled (Box-Muller over the raw engine) instead of
// std::normal_distribution so that a seed means the same numbers on every
// standard library.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform();  // [0, 1)
    double normal();
    cplx normal_cplx();
    std::size_t pick_index(std::size_t n);  // [0, n)

  private:
    std::mt19937_64 engine_;
};

// Haar-uniform pure state: complex-normal amplitudes, normalized.
StateVector random_pure_state(Rng& rng, const HilbertStructure& structure);

// Convex mixture of 2-4 Haar pure states with uniform-simplex weights.
DensityOperator random_mixed_state(Rng& rng, const HilbertStructure& structure);

// Unnormalized complex-normal vector.
RawVector random_raw_vector(Rng& rng, const HilbertStructure& structure);

// Rank-r projector spanned by Haar-random orthonormal vectors.
CMatrix random_projector(Rng& rng, std::size_t dim, std::size_t rank);

// Unitary from Gram-Schmidt orthonormalization of a complex-normal matrix.
CMatrix random_unitary(Rng& rng, std::size_t dim);

std::vector<double> random_simplex_weights(Rng& rng, std::size_t n);

}  // namespace qstate
