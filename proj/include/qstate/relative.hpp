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

#include <optional>
#include <span>
#include <vector>

#include "qstate/types.hpp"

namespace qstate {

// Relative-state description: the object subsystem state conditioned on a
// subject event, with no collapse of the composite state.
//
//   rho_obj = tr_rest(rho Q) / tr(rho Q)
//
// The subject entity is the (subject subsystem, subject event) pair, i.e. a
// SubsystemEvent.
using SubjectEntity = SubsystemEvent;

// Direct route: multiply by the embedded subject projector on the full
// N-partite space, then trace out everything but the object at once.
DensityOperator relative_state(const DensityOperator& rho, const SubjectEntity& subject,
                               std::size_t object);
DensityOperator relative_state(const StateVector& psi, const SubjectEntity& subject,
                               std::size_t object);

// Pair-reduction route: first reduce the composite state to the
// {object, subject} pair, then condition within that bipartite state. Kept as
// an independently exercisable path; its agreement with relative_state is a
// tested identity.
DensityOperator relative_state_via_pair_reduction(const DensityOperator& rho,
                                                  const SubjectEntity& subject,
                                                  std::size_t object);
DensityOperator relative_state_via_pair_reduction(const StateVector& psi,
                                                  const SubjectEntity& subject,
                                                  std::size_t object);

// Everett's relative ket for an elementary subject event on a bipartite pure
// state: the contraction <phi|psi> on the subject factor, normalized. Its
// outer product equals relative_state with subject event |phi><phi|.
StateVector everett_relative_ket(const StateVector& psi, const StateVector& phi,
                                 std::size_t subject);

// Branch decomposition of a pure composite state induced by an event
// partition on one subsystem. Branches whose event has probability below
// tol::prob carry weight 0 and no component (degenerate branches).
struct RelevantDecomposition {
    std::vector<double> weights;
    std::vector<std::optional<StateVector>> components;
    std::vector<std::optional<DensityOperator>> object_components;
};

RelevantDecomposition relevant_decomposition(const StateVector& psi,
                                             std::span<const SubsystemEvent> events,
                                             std::size_t object, double cmp_tol = tol::cmp);

}  // namespace qstate
