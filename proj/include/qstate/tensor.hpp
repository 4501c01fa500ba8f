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

#include <span>
#include <vector>

#include "qstate/types.hpp"

namespace qstate {

// |a> tensor |b>; the result structure concatenates the factors and the flat
// index follows the most-significant-first convention of HilbertStructure.
StateVector tensor_product(const StateVector& a, const StateVector& b);

// Computational basis state |flat> over the given structure.
StateVector basis_state(const HilbertStructure& structure, std::size_t flat);

// Flat-index offsets of every digit combination of the listed subsystems
// (all other digits zero), enumerated row-major in the listed order.
std::vector<std::size_t> subset_offsets(const HilbertStructure& structure,
                                        std::span<const std::size_t> subsystems);

// Reduction onto the kept subsystems (original relative order). The matrix
// variant traces arbitrary operators, e.g. products rho * Q; the
// DensityOperator wrapper is the usual reduced state.
// Throws degenerate-trace when keep is empty or covers every subsystem.
CMatrix partial_trace_matrix(const CMatrix& m, const HilbertStructure& structure,
                             std::span<const std::size_t> keep);
DensityOperator partial_trace(const DensityOperator& rho, std::span<const std::size_t> keep);

// Contraction of a bra on one subsystem with a composite ket: the amplitudes
// of the result on the remaining subsystems are
//   out[k] = sum_l conj(phi[l]) * psi[(k, l)].
// Basis independent; inputs and output are raw (no normalization implied).
RawVector partial_scalar_product(const RawVector& phi, const RawVector& psi,
                                 std::size_t subsystem);

// Kronecker product a (x) b.
CMatrix kron(const CMatrix& a, const CMatrix& b);

// I (x) ... (x) Q (x) ... (x) I with Q on the event's subsystem.
CMatrix embed(const SubsystemEvent& event, const HilbertStructure& structure);

// Applies a unitary to one factor, identity on the rest. Throws non-unitary
// when u fails the unitarity tolerance.
StateVector apply_subsystem_unitary(const StateVector& state, const CMatrix& u,
                                    std::size_t subsystem, double unit_tol = tol::unit);

}  // namespace qstate
