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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qstate/types.hpp"

namespace qstate {

// Randomized equivalence checks. Each trial draws its own generator seeded
// with (seed + trial index), so reports are reproducible and trials are
// order-independent; rerunning a check with seed = failing_seed and one trial
// replays a failure exactly.

struct CheckReport {
    std::string name;
    std::size_t trials = 0;
    double max_deviation = 0.0;
    bool pass = false;
    std::optional<std::uint64_t> failing_seed;  // set iff !pass
};

// Collapse-then-reduce versus condition-without-collapse: the object states
// from the two descriptions, compared element-wise over random pure and
// mixed composite states and random subject events.
CheckReport check_rs_equals_collapse(std::size_t trials,
                                     std::span<const HilbertStructure> dims_pool,
                                     std::uint64_t seed, double cmp_tol = tol::cmp);

// Partial-scalar-product route versus partial-trace route for an elementary
// subject event: numerator operators and denominators computed both ways.
CheckReport check_psp_vs_ptrace(std::size_t trials,
                                std::span<const HilbertStructure> dims_pool,
                                std::uint64_t seed, double cmp_tol = tol::cmp);

// The partial scalar product evaluated in randomly rotated factor bases,
// rotated back and compared against the direct evaluation.
CheckReport check_basis_independence(std::size_t trials,
                                     std::span<const HilbertStructure> dims_pool,
                                     std::uint64_t seed, double cmp_tol = tol::cmp);

// Probability of immediate succession (event on one subsystem, then an event
// on the other in the Lueders-changed state) versus coincidence probability
// in the original state.
CheckReport check_succession_vs_coincidence(std::size_t trials,
                                            std::span<const HilbertStructure> dims_pool,
                                            std::uint64_t seed, double cmp_tol = tol::cmp);

// After an elementary event the collapse description leaves the subject
// subsystem pure and uncorrelated; checked over random bipartite states.
CheckReport check_distinguishability(std::size_t trials,
                                     std::span<const HilbertStructure> dims_pool,
                                     std::uint64_t seed, double cmp_tol = tol::cmp);

// All five checks in a fixed order.
std::vector<CheckReport> run_all_checks(std::size_t trials,
                                        std::span<const HilbertStructure> dims_pool,
                                        std::uint64_t seed, double cmp_tol = tol::cmp);

// Side-by-side description of the subject subsystem after an elementary
// event |phi><phi| on subsystem 2 of a bipartite pure state: the no-collapse
// description keeps the (possibly improper-mixture) reduced state, the
// collapse description asserts the pure state phi. Purities and residual
// correlation norms quantify how the two descriptions differ in principle.
struct DistinguishabilityReport {
    DensityOperator rsqm_subject_state;
    DensityOperator cqm_subject_state;
    double rsqm_purity = 0.0;
    double cqm_purity = 0.0;
    double correlation_norm_rsqm = 0.0;
    double correlation_norm_cqm = 0.0;
};

DistinguishabilityReport distinguishability_report(const StateVector& psi,
                                                   const StateVector& phi);

}  // namespace qstate
