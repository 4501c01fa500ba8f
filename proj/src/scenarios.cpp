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

#include "qstate/scenarios.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "qstate/collapse.hpp"
#include "qstate/relative.hpp"
#include "qstate/tensor.hpp"

namespace qstate {

namespace {

CMatrix ray_projector(std::size_t dim, std::size_t index) {
    CMatrix p(dim, dim);
    p(index, index) = 1.0;
    return p;
}

// Collapse route and relative-state route for every branch of an event
// partition on `subject`, with the element-wise verdict between them.
void fill_branches(ScenarioReport& report, const StateVector& composite,
                   std::span<const SubsystemEvent> events, std::size_t object,
                   double cmp_tol) {
    const RelevantDecomposition decomp =
        relevant_decomposition(composite, events, object, cmp_tol);
    report.branch_weights = decomp.weights;
    report.rsqm_object_states = decomp.object_components;

    report.equivalence_verdict = true;
    report.max_branch_deviation = 0.0;
    for (std::size_t b = 0; b < events.size(); ++b) {
        if (!decomp.object_components[b]) {
            report.cqm_object_states.emplace_back(std::nullopt);
            continue;
        }
        DensityOperator collapsed = collapsed_object_state(composite, events[b], object);
        const double dev =
            max_abs_diff(collapsed.matrix, decomp.object_components[b]->matrix);
        report.max_branch_deviation = std::max(report.max_branch_deviation, dev);
        if (dev > cmp_tol)
            report.equivalence_verdict = false;
        report.cqm_object_states.emplace_back(std::move(collapsed));
    }
}

}  // namespace

ScenarioReport run_one_slit(const OneSlitModel& model, double cmp_tol) {
    if (model.n_cells < 2)
        throw Error(ErrorKind::invalid_argument, "one-slit model needs n_cells >= 2");
    if (model.initial_amplitudes.size() != model.n_cells)
        throw Error(ErrorKind::invalid_argument, "amplitude count does not match n_cells");

    std::vector<std::size_t> slit = model.slit_cells;
    std::sort(slit.begin(), slit.end());
    slit.erase(std::unique(slit.begin(), slit.end()), slit.end());
    if (!slit.empty() && slit.back() >= model.n_cells)
        throw Error(ErrorKind::invalid_argument, "slit cell index out of range");
    if (slit.empty() || slit.size() == model.n_cells)
        throw Error(ErrorKind::degenerate_slit,
                    "slit must be a non-empty proper subset of the screen cells");

    const HilbertStructure quanton({model.n_cells});
    StateVector position{quanton, model.initial_amplitudes};
    validate_state(position);

    // The quanton entangles with the occurrence register: cells behind the
    // slit feed |passed> = |0>, the rest feed |hit> = |1>.
    const HilbertStructure composite_structure({model.n_cells, 2});
    std::vector<cplx> amps(composite_structure.total_dim());
    for (std::size_t x = 0; x < model.n_cells; ++x) {
        const bool in_slit = std::binary_search(slit.begin(), slit.end(), x);
        amps[x * 2 + (in_slit ? 0 : 1)] = model.initial_amplitudes[x];
    }
    StateVector composite{composite_structure, std::move(amps)};

    const std::array<SubsystemEvent, 2> partition{
        SubsystemEvent{1, ray_projector(2, 0)},  // triggering event: passed the slit
        SubsystemEvent{1, ray_projector(2, 1)},  // opposite event: hit the rest
    };
    const double p_slit = event_probability(composite, partition[0]);
    const double p_screen = event_probability(composite, partition[1]);
    if (p_slit <= tol::prob || p_screen <= tol::prob)
        throw Error(ErrorKind::degenerate_slit,
                    "both screen events need positive probability");

    ScenarioReport report{.composite_state = composite};
    report.branch_names = {"slit", "screen"};
    fill_branches(report, composite, partition, 0, cmp_tol);
    report.detector_distribution = {{"slit", report.branch_weights[0]},
                                    {"screen", report.branch_weights[1]}};
    report.timeline = {
        {"t_i", "quanton-screen interaction complete; negative-result occurrence of the "
                "triggering event selects the slit branch"},
        {"t_f", "surviving component propagates to the measuring instrument"},
    };
    return report;
}

ScenarioReport run_mach_zehnder(const MachZehnderModel& model, double cmp_tol) {
    if (!(model.theta_deg >= 0.0 && model.theta_deg <= 180.0))
        throw Error(ErrorKind::invalid_argument,
                    "first beam splitter angle must be in [0, 180] degrees");

    const double theta = model.theta_deg * std::numbers::pi / 180.0;
    const HilbertStructure photon_space({2});  // |u> = 0, |l> = 1

    // t_i: preparation on the first beam splitter.
    StateVector photon{photon_space, {std::cos(theta), std::sin(theta)}};

    // t_bar: Wheeler's delayed choice may replace the device configuration
    // after preparation; the prepared state is untouched.
    bool second_bs = model.second_bs_present;
    if (model.delayed_second_bs)
        second_bs = *model.delayed_second_bs;

    // t_f: the photon reaches the second beam splitter's position.
    if (second_bs) {
        CMatrix bs(2, 2);
        const double r = 1.0 / std::sqrt(2.0);
        bs(0, 0) = r;
        bs(0, 1) = r;
        bs(1, 0) = r;
        bs(1, 1) = -r;
        photon = apply_subsystem_unitary(photon, bs, 0);
    }

    // t > t_f: each output port excites its detector; the coherence is not
    // wiped out, only delocalized into the photon-detector correlations.
    const HilbertStructure composite_structure({2, 2});
    std::vector<cplx> amps(composite_structure.total_dim());
    amps[0 * 2 + 0] = photon.amplitudes[0];  // |u>|D_H>
    amps[1 * 2 + 1] = photon.amplitudes[1];  // |l>|D_V>
    StateVector composite{composite_structure, std::move(amps)};

    const std::array<SubsystemEvent, 2> partition{
        SubsystemEvent{1, ray_projector(2, 0)},
        SubsystemEvent{1, ray_projector(2, 1)},
    };

    ScenarioReport report{.composite_state = composite};
    report.branch_names = {"D_H", "D_V"};
    fill_branches(report, composite, partition, 0, cmp_tol);
    report.detector_distribution = {{"D_H", report.branch_weights[0]},
                                    {"D_V", report.branch_weights[1]}};

    const char* initial = model.second_bs_present ? "interference" : "which-way";
    const char* final_mode = second_bs ? "interference" : "which-way";
    report.timeline.emplace_back(
        "t_i", std::string("photon prepared on the first beam splitter; device is ") + initial);
    if (model.delayed_second_bs)
        report.timeline.emplace_back(
            "t_bar", std::string("delayed choice fixes the device as ") + final_mode);
    report.timeline.emplace_back(
        "t_f", std::string("photon leaves the ") + final_mode + " device and meets the detectors");
    return report;
}

}  // namespace qstate
