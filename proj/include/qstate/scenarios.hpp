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
#include <string>
#include <utility>
#include <vector>

#include "qstate/types.hpp"

namespace qstate {

// Executable experiments, each reporting the collapse (CQM) and
// relative-state (RSQM) object descriptions side by side.

// A quanton crossing a screen with a slit. The screen is modeled as a
// two-dimensional occurrence register: |0> = passed the slit, |1> = hit the
// rest of the screen; the quanton's transverse position (n_cells) carries the
// spatial structure.
struct OneSlitModel {
    std::size_t n_cells = 0;
    std::vector<std::size_t> slit_cells;
    std::vector<cplx> initial_amplitudes;
};

// Mach-Zehnder interferometer with a variable first beam splitter and an
// optional delayed decision on the second one. Conventions: the first beam
// splitter prepares cos(theta)|u> + sin(theta)|l>; the second maps
// |u> -> (|D_H> + |D_V>)/sqrt(2) and |l> -> (|D_H> - |D_V>)/sqrt(2), so
// theta = 45 deg sends every photon to D_H in the interference device.
struct MachZehnderModel {
    double theta_deg = 45.0;
    bool second_bs_present = false;
    // Wheeler switch: replaces second_bs_present after preparation and
    // before the photon reaches the second beam splitter's position.
    std::optional<bool> delayed_second_bs;
};

struct ScenarioReport {
    StateVector composite_state;
    std::vector<std::string> branch_names;
    std::vector<double> branch_weights;
    std::vector<std::optional<DensityOperator>> cqm_object_states;
    std::vector<std::optional<DensityOperator>> rsqm_object_states;
    std::vector<std::pair<std::string, double>> detector_distribution;
    bool equivalence_verdict = false;
    double max_branch_deviation = 0.0;
    // Ordered (instant, what happened) bookkeeping tags: t_i, t_bar, t_f.
    std::vector<std::pair<std::string, std::string>> timeline;
};

// Throws degenerate-slit when the slit is empty/full or either screen event
// has (near-)zero probability.
ScenarioReport run_one_slit(const OneSlitModel& model, double cmp_tol = tol::cmp);

ScenarioReport run_mach_zehnder(const MachZehnderModel& model, double cmp_tol = tol::cmp);

}  // namespace qstate
