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

#include "qstate/types.hpp"

namespace qstate {

// Lueders selective change of state: the collapse description. An event Q on
// one subsystem occurs ideally; the composite state is projected and
// renormalized, and the distant (object) subsystem state follows by partial
// trace.

struct CollapseOutcome {
    double probability;
    StateVector post_state;
};

struct CollapseOutcomeMixed {
    double probability;
    DensityOperator post_state;
};

// <psi| (I (x) Q) |psi>, resp. tr(rho (I (x) Q)). Clamped to [0, 1] when
// within tol::prob of either boundary.
double event_probability(const StateVector& psi, const SubsystemEvent& event);
double event_probability(const DensityOperator& rho, const SubsystemEvent& event);

// psi -> Q psi / sqrt(<psi|Q|psi>). Throws zero-probability-event when the
// event cannot occur (probability <= tol::prob).
CollapseOutcome collapse_pure(const StateVector& psi, const SubsystemEvent& event);

// rho -> Q rho Q / tr(Q rho Q). The numerator is computed literally as
// Q rho Q so that its agreement with the tr(rho Q) form stays a checkable
// identity rather than an implementation shortcut.
CollapseOutcomeMixed collapse_mixed(const DensityOperator& rho, const SubsystemEvent& event);

// Reduced state of the object subsystem after the collapse.
DensityOperator collapsed_object_state(const StateVector& psi, const SubsystemEvent& event,
                                       std::size_t object);
DensityOperator collapsed_object_state(const DensityOperator& rho, const SubsystemEvent& event,
                                       std::size_t object);

// tr(a b) without forming the product.
cplx trace_of_product(const CMatrix& a, const CMatrix& b);

}  // namespace qstate
