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

#include <cmath>
#include <vector>

#include "qstate/types.hpp"

namespace testutil {

using qstate::cplx;
using qstate::CMatrix;
using qstate::HilbertStructure;
using qstate::StateVector;

inline const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

inline StateVector make_state(std::vector<std::size_t> dims, std::vector<cplx> amps) {
    return {HilbertStructure(std::move(dims)), std::move(amps)};
}

// (|00> + |11>)/sqrt(2) over dims (2, 2).
inline StateVector bell_state() {
    return make_state({2, 2}, {kInvSqrt2, 0.0, 0.0, kInvSqrt2});
}

// Which-way device state: (|u>|D_H> + |l>|D_V>)/sqrt(2), photon first.
inline StateVector which_way_state() {
    return make_state({2, 2}, {kInvSqrt2, 0.0, 0.0, kInvSqrt2});
}

// |k><k| on a d-dimensional subsystem.
inline CMatrix ray(std::size_t d, std::size_t k) {
    CMatrix p(d, d);
    p(k, k) = 1.0;
    return p;
}

inline CMatrix projector_onto(std::span<const cplx> v) {
    return qstate::outer(v, v);
}

}  // namespace testutil
