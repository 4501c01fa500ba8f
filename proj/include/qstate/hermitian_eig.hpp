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

#include <vector>

#include "qstate/types.hpp"

namespace qstate {

// Eigenvalues of a Hermitian matrix, ascending, via cyclic Jacobi rotations.
// The input is symmetrized as (A + A^dagger)/2 first; callers that care about
// Hermiticity check it separately. Intended for the small dense operators
// this library works with.
std::vector<double> hermitian_eigenvalues(const CMatrix& a);

}  // namespace qstate
