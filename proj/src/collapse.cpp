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

#include "qstate/collapse.hpp"

#include <array>
#include <cmath>

#include "qstate/kernels.hpp"
#include "qstate/tensor.hpp"

namespace qstate {

namespace {

double clamp_probability(double p) {
    if (p < 0.0 && p >= -tol::prob)
        return 0.0;
    if (p > 1.0 && p <= 1.0 + tol::prob)
        return 1.0;
    return p;
}

void check_object(const HilbertStructure& structure, const SubsystemEvent& event,
                  std::size_t object) {
    if (object >= structure.num_subsystems())
        throw Error(ErrorKind::invalid_argument, "object subsystem index out of range");
    if (object == event.subsystem)
        throw Error(ErrorKind::subject_object_overlap,
                    "object and subject subsystems must differ");
}

}  // namespace

cplx trace_of_product(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.rows() || a.rows() != b.cols())
        throw Error(ErrorKind::structure_mismatch, "shape mismatch in trace of product");
    cplx t = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            t += a(i, j) * b(j, i);
    return t;
}

double event_probability(const StateVector& psi, const SubsystemEvent& event) {
    const CMatrix q = embed(event, psi.structure);
    const std::vector<cplx> qpsi = q.apply(psi.amplitudes);
    const double p =
        kernels::dot_conj(psi.amplitudes.data(), qpsi.data(), qpsi.size()).real();
    return clamp_probability(p);
}

double event_probability(const DensityOperator& rho, const SubsystemEvent& event) {
    const CMatrix q = embed(event, rho.structure);
    const double p = trace_of_product(rho.matrix, q).real();
    return clamp_probability(p);
}

CollapseOutcome collapse_pure(const StateVector& psi, const SubsystemEvent& event) {
    const CMatrix q = embed(event, psi.structure);
    std::vector<cplx> projected = q.apply(psi.amplitudes);
    const double p = clamp_probability(
        kernels::dot_conj(psi.amplitudes.data(), projected.data(), projected.size()).real());
    if (p <= tol::prob)
        throw Error(ErrorKind::zero_probability_event,
                    "event has zero probability and cannot occur");
    kernels::scale(1.0 / std::sqrt(p), projected.data(), projected.size());
    return {p, StateVector{psi.structure, std::move(projected)}};
}

CollapseOutcomeMixed collapse_mixed(const DensityOperator& rho, const SubsystemEvent& event) {
    const CMatrix q = embed(event, rho.structure);
    CMatrix qrq = q * rho.matrix * q;
    const double p = clamp_probability(qrq.trace().real());
    if (p <= tol::prob)
        throw Error(ErrorKind::zero_probability_event,
                    "event has zero probability and cannot occur");
    qrq *= 1.0 / p;
    return {p, DensityOperator{rho.structure, std::move(qrq)}};
}

DensityOperator collapsed_object_state(const StateVector& psi, const SubsystemEvent& event,
                                       std::size_t object) {
    check_object(psi.structure, event, object);
    const CollapseOutcome outcome = collapse_pure(psi, event);
    return partial_trace(pure_density(outcome.post_state), std::array{object});
}

DensityOperator collapsed_object_state(const DensityOperator& rho, const SubsystemEvent& event,
                                       std::size_t object) {
    check_object(rho.structure, event, object);
    const CollapseOutcomeMixed outcome = collapse_mixed(rho, event);
    return partial_trace(outcome.post_state, std::array{object});
}

}  // namespace qstate
