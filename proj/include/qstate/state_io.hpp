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

#include <iosfwd>
#include <string>
#include <vector>

#include "qstate/types.hpp"

namespace qstate {

// Line-oriented UTF-8 state files:
//   dims d1 d2 ... dN
//   amp <flat-index> <re> <im>        (state vectors; omitted entries are 0)
//   rho <row> <col> <re> <im>         (density operators / Hermitian matrices)
// A file carries either amp or rho records, not both. Numbers are written
// with 17 significant digits so values round-trip exactly.

enum class StateFileKind { vector, density };

struct StateFile {
    HilbertStructure structure;
    StateFileKind kind;
    std::vector<cplx> amplitudes;  // kind == vector
    CMatrix matrix;                // kind == density
};

StateFile read_state_file(std::istream& in);
StateFile read_state_file(const std::string& path);

void write_state_vector(std::ostream& out, const HilbertStructure& structure,
                        std::span<const cplx> amplitudes);
void write_density(std::ostream& out, const DensityOperator& rho);

// Projector files reuse the rho record syntax over a single subsystem.
// Validates the SubsystemEvent invariants (Hermitian, idempotent).
CMatrix read_projector_file(const std::string& path, std::size_t expected_dim);

// %.17g
std::string format_g17(double x);

}  // namespace qstate
