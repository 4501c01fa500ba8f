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

#include "qstate/relative.hpp"

#include <algorithm>
#include <array>

#include "qstate/collapse.hpp"
#include "qstate/tensor.hpp"

namespace qstate {

namespace {

void check_subject_object(const HilbertStructure& structure, const SubjectEntity& subject,
                          std::size_t object) {
    if (object >= structure.num_subsystems())
        throw Error(ErrorKind::invalid_argument, "object subsystem index out of range");
    if (subject.subsystem >= structure.num_subsystems())
        throw Error(ErrorKind::structure_mismatch, "subject subsystem index out of range");
    if (object == subject.subsystem)
        throw Error(ErrorKind::subject_object_overlap,
                    "object and subject subsystems must differ");
}

// tr_rest(rho Q) / tr(rho Q) with Q embedded on the given structure.
DensityOperator condition_on_event(const CMatrix& rho, const HilbertStructure& structure,
                                   const SubjectEntity& subject, std::size_t object) {
    const CMatrix conditioned = rho * embed(subject, structure);
    const double denom = conditioned.trace().real();
    if (denom <= tol::prob)
        throw Error(ErrorKind::zero_probability_event, "subject event has zero probability");
    CMatrix num = partial_trace_matrix(conditioned, structure, std::array{object});
    num *= 1.0 / denom;
    return {structure.subset(std::array{object}), std::move(num)};
}

}  // namespace

DensityOperator relative_state(const DensityOperator& rho, const SubjectEntity& subject,
                               std::size_t object) {
    check_subject_object(rho.structure, subject, object);
    return condition_on_event(rho.matrix, rho.structure, subject, object);
}

DensityOperator relative_state(const StateVector& psi, const SubjectEntity& subject,
                               std::size_t object) {
    check_subject_object(psi.structure, subject, object);
    return condition_on_event(pure_density(psi).matrix, psi.structure, subject, object);
}

DensityOperator relative_state_via_pair_reduction(const DensityOperator& rho,
                                                  const SubjectEntity& subject,
                                                  std::size_t object) {
    check_subject_object(rho.structure, subject, object);
    if (rho.structure.num_subsystems() == 2)
        return condition_on_event(rho.matrix, rho.structure, subject, object);

    // Reduce to the {object, subject} pair first, then condition inside it.
    const std::size_t lo = std::min(object, subject.subsystem);
    const std::size_t hi = std::max(object, subject.subsystem);
    const DensityOperator pair = partial_trace(rho, std::array{lo, hi});
    const std::size_t object_pos = object < subject.subsystem ? 0 : 1;
    const SubjectEntity pair_subject{1 - object_pos, subject.projector};
    return condition_on_event(pair.matrix, pair.structure, pair_subject, object_pos);
}

DensityOperator relative_state_via_pair_reduction(const StateVector& psi,
                                                  const SubjectEntity& subject,
                                                  std::size_t object) {
    check_subject_object(psi.structure, subject, object);
    return relative_state_via_pair_reduction(pure_density(psi), subject, object);
}

StateVector everett_relative_ket(const StateVector& psi, const StateVector& phi,
                                 std::size_t subject) {
    if (psi.structure.num_subsystems() != 2)
        throw Error(ErrorKind::structure_mismatch,
                    "the elementary relative ket is defined on bipartite states");
    // The contraction validates phi against the subject factor.
    const RawVector projected = partial_scalar_product(phi.raw(), psi.raw(), subject);
    return normalized(projected);
}

RelevantDecomposition relevant_decomposition(const StateVector& psi,
                                             std::span<const SubsystemEvent> events,
                                             std::size_t object, double cmp_tol) {
    if (events.empty())
        throw Error(ErrorKind::not_a_partition, "empty event list");
    const std::size_t subject = events.front().subsystem;
    for (const SubsystemEvent& e : events)
        if (e.subsystem != subject)
            throw Error(ErrorKind::not_a_partition, "partition events span several subsystems");
    if (subject >= psi.structure.num_subsystems())
        throw Error(ErrorKind::structure_mismatch, "subject subsystem index out of range");
    if (object == subject)
        throw Error(ErrorKind::subject_object_overlap,
                    "object and subject subsystems must differ");

    const std::size_t d = psi.structure.dim(subject);
    CMatrix sum(d, d);
    for (const SubsystemEvent& e : events) {
        if (!e.projector.is_square() || e.projector.rows() != d)
            throw Error(ErrorKind::structure_mismatch,
                        "projector dimension does not match the subject subsystem");
        sum += e.projector;
    }
    if (max_abs_diff(sum, CMatrix::identity(d)) > cmp_tol)
        throw Error(ErrorKind::not_a_partition, "projectors do not sum to the identity");
    for (std::size_t i = 0; i < events.size(); ++i)
        for (std::size_t j = i + 1; j < events.size(); ++j)
            if (max_abs(events[i].projector * events[j].projector) > cmp_tol)
                throw Error(ErrorKind::not_a_partition, "projectors are not pairwise orthogonal");

    RelevantDecomposition out;
    for (const SubsystemEvent& e : events) {
        const double p = event_probability(psi, e);
        if (p <= tol::prob) {
            // Degenerate branch: the event cannot occur in psi.
            out.weights.push_back(0.0);
            out.components.emplace_back(std::nullopt);
            out.object_components.emplace_back(std::nullopt);
            continue;
        }
        out.weights.push_back(p);
        out.components.emplace_back(collapse_pure(psi, e).post_state);
        out.object_components.emplace_back(relative_state(psi, e, object));
    }
    return out;
}

}  // namespace qstate
