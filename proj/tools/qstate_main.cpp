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

// qstate: scenario and equivalence-check front end.
//
// Exit codes: 0 success / all checks pass, 1 domain error or check failure,
// 2 usage or parse error.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qstate/collapse.hpp"
#include "qstate/kernels.hpp"
#include "qstate/oracles.hpp"
#include "qstate/relative.hpp"
#include "qstate/scenarios.hpp"
#include "qstate/state_io.hpp"
#include "qstate/tensor.hpp"

namespace {

using namespace qstate;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct CommonOptions {
    std::string format = "text";
    std::string out_path;
    double tolerance = tol::cmp;
};

double env_default_tolerance() {
    if (const char* env = std::getenv("QSTATE_TOLERANCE")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end && *end == '\0' && v > 0.0)
            return v;
        std::cerr << "warning: ignoring invalid QSTATE_TOLERANCE '" << env << "'\n";
    }
    return tol::cmp;
}

void add_common(CLI::App* cmd, CommonOptions& opts) {
    opts.tolerance = env_default_tolerance();
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"text", "machine"}))
        ->capture_default_str();
    cmd->add_option("--out", opts.out_path, "Write the report to a file instead of stdout");
    cmd->add_option("--tolerance", opts.tolerance,
                    "Comparison tolerance (overrides QSTATE_TOLERANCE)")
        ->check(CLI::PositiveNumber);
}

// Deterministic 9-decimal probability and 6-decimal matrix rendering.
std::string format_prob(double p) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9f", p);
    return buf;
}

void print_matrix(std::ostream& out, const CMatrix& m, const std::string& indent) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out << indent;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%+.6f%+.6fi", m(i, j).real(), m(i, j).imag());
            out << (j ? "  " : "") << buf;
        }
        out << '\n';
    }
}

void write_matrix_records(std::ostream& out, const std::string& prefix, const CMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != cplx{})
                out << prefix << ' ' << i << ' ' << j << ' ' << format_g17(m(i, j).real())
                    << ' ' << format_g17(m(i, j).imag()) << '\n';
}

std::vector<HilbertStructure> parse_dims_pool(const std::string& text) {
    std::vector<HilbertStructure> pool;
    std::istringstream stream(text);
    std::string entry;
    while (std::getline(stream, entry, ',')) {
        std::vector<std::size_t> dims;
        std::istringstream dims_stream(entry);
        std::string dim_text;
        while (std::getline(dims_stream, dim_text, 'x')) {
            try {
                dims.push_back(std::stoul(dim_text));
            } catch (const std::exception&) {
                throw CLI::ValidationError("--dims-pool", "bad dimension '" + dim_text + "'");
            }
        }
        try {
            pool.emplace_back(std::move(dims));
        } catch (const Error& e) {
            throw CLI::ValidationError("--dims-pool", e.what());
        }
    }
    if (pool.empty())
        throw CLI::ValidationError("--dims-pool", "empty pool");
    return pool;
}

// Runs `body(out)` with out bound to --out or stdout.
int with_output(const CommonOptions& opts, const std::function<int(std::ostream&)>& body) {
    if (opts.out_path.empty())
        return body(std::cout);
    std::ofstream file(opts.out_path);
    if (!file) {
        std::cerr << "error: cannot open '" << opts.out_path << "' for writing\n";
        return kExitDomain;
    }
    return body(file);
}

// ---------------------------------------------------------------- check ----

struct CheckOptions {
    CommonOptions common;
    std::size_t trials = 1000;
    std::uint64_t seed = 42;
    std::string pool_text = "2x2,2x3,3x3,2x2x2,2x3x2";
};

int run_check(const CheckOptions& opts) {
    const std::vector<HilbertStructure> pool = parse_dims_pool(opts.pool_text);
    const std::vector<CheckReport> reports =
        run_all_checks(opts.trials, pool, opts.seed, opts.common.tolerance);

    return with_output(opts.common, [&](std::ostream& out) {
        bool all_pass = true;
        if (opts.common.format == "machine") {
            out << "report check\n";
            out << "trials " << opts.trials << '\n';
            out << "seed " << opts.seed << '\n';
            out << "pool " << opts.pool_text << '\n';
            out << "tolerance " << format_g17(opts.common.tolerance) << '\n';
            for (const CheckReport& r : reports) {
                all_pass = all_pass && r.pass;
                out << "check " << r.name << " pass " << (r.pass ? 1 : 0) << " trials "
                    << r.trials << " max_deviation " << format_g17(r.max_deviation);
                if (r.failing_seed)
                    out << " failing_seed " << *r.failing_seed;
                out << '\n';
            }
            out << "result " << (all_pass ? "pass" : "fail") << '\n';
        } else {
            out << "check: trials=" << opts.trials << " seed=" << opts.seed
                << " pool=" << opts.pool_text << " tolerance=" << opts.common.tolerance
                << " kernels=" << kernels::backend_name() << '\n';
            for (const CheckReport& r : reports) {
                all_pass = all_pass && r.pass;
                char dev[32];
                std::snprintf(dev, sizeof dev, "%.3e", r.max_deviation);
                out << (r.pass ? "PASS " : "FAIL ") << r.name;
                for (std::size_t pad = r.name.size(); pad < 28; ++pad)
                    out << ' ';
                out << " max_deviation=" << dev;
                if (r.failing_seed)
                    out << " failing_seed=" << *r.failing_seed;
                out << '\n';
            }
            out << (all_pass ? "all checks passed" : "some checks FAILED") << '\n';
        }
        return all_pass ? kExitOk : kExitDomain;
    });
}

// ------------------------------------------------------------ scenarios ----

void render_scenario_text(std::ostream& out, const ScenarioReport& report) {
    for (const auto& [instant, what] : report.timeline)
        out << instant << ": " << what << '\n';
    out << "composite state:\n";
    {
        std::ostringstream state;
        write_state_vector(state, report.composite_state.structure,
                           report.composite_state.amplitudes);
        std::istringstream lines(state.str());
        std::string line;
        while (std::getline(lines, line))
            out << "  " << line << '\n';
    }
    for (std::size_t b = 0; b < report.branch_names.size(); ++b) {
        const std::string& name = report.branch_names[b];
        out << "weight(" << name << ") = " << format_prob(report.branch_weights[b]) << '\n';
        if (!report.rsqm_object_states[b]) {
            out << "  degenerate branch (probability below threshold)\n";
            continue;
        }
        out << "  cqm object state:\n";
        print_matrix(out, report.cqm_object_states[b]->matrix, "    ");
        out << "  rsqm object state:\n";
        print_matrix(out, report.rsqm_object_states[b]->matrix, "    ");
    }
    for (const auto& [detector, p] : report.detector_distribution)
        out << "P(" << detector << ") = " << format_prob(p) << '\n';
    out << "verdict " << (report.equivalence_verdict ? "EQUIVALENT" : "NOT EQUIVALENT") << '\n';
}

void render_scenario_machine(std::ostream& out, const std::string& name,
                             const std::vector<std::pair<std::string, std::string>>& params,
                             const ScenarioReport& report) {
    out << "report " << name << '\n';
    for (const auto& [key, value] : params)
        out << key << ' ' << value << '\n';
    write_state_vector(out, report.composite_state.structure,
                       report.composite_state.amplitudes);
    for (const auto& [detector, p] : report.detector_distribution)
        out << "detector " << detector << ' ' << format_g17(p) << '\n';
    for (std::size_t b = 0; b < report.branch_names.size(); ++b) {
        const std::string& branch = report.branch_names[b];
        if (!report.rsqm_object_states[b]) {
            out << "branch " << branch << " degenerate\n";
            continue;
        }
        out << "branch " << branch << " weight " << format_g17(report.branch_weights[b])
            << '\n';
        write_matrix_records(out, "branch " + branch + " cqm",
                             report.cqm_object_states[b]->matrix);
        write_matrix_records(out, "branch " + branch + " rsqm",
                             report.rsqm_object_states[b]->matrix);
    }
    out << "max_branch_deviation " << format_g17(report.max_branch_deviation) << '\n';
    out << "equivalence " << (report.equivalence_verdict ? 1 : 0) << '\n';
}

int render_scenario(const CommonOptions& common, const std::string& name,
                    const std::vector<std::pair<std::string, std::string>>& params,
                    const ScenarioReport& report) {
    return with_output(common, [&](std::ostream& out) {
        if (common.format == "machine")
            render_scenario_machine(out, name, params, report);
        else
            render_scenario_text(out, report);
        return report.equivalence_verdict ? kExitOk : kExitDomain;
    });
}

struct OneSlitOptions {
    CommonOptions common;
    std::size_t cells = 4;
    std::vector<std::size_t> slit;
    std::string amps_path;
};

int run_one_slit_cmd(const OneSlitOptions& opts) {
    OneSlitModel model;
    model.n_cells = opts.cells;
    model.slit_cells = opts.slit;
    if (opts.amps_path.empty()) {
        model.initial_amplitudes.assign(opts.cells,
                                        1.0 / std::sqrt(static_cast<double>(opts.cells)));
    } else {
        const StateFile file = read_state_file(opts.amps_path);
        if (file.kind != StateFileKind::vector || file.structure.total_dim() != opts.cells)
            throw Error(ErrorKind::parse_error,
                        "--amps file must hold a state vector of dimension " +
                            std::to_string(opts.cells));
        model.initial_amplitudes = file.amplitudes;
    }

    const ScenarioReport report = run_one_slit(model, opts.common.tolerance);
    std::string slit_text;
    for (std::size_t i = 0; i < opts.slit.size(); ++i)
        slit_text += (i ? "," : "") + std::to_string(opts.slit[i]);
    return render_scenario(opts.common, "one-slit",
                           {{"cells", std::to_string(opts.cells)}, {"slit", slit_text}},
                           report);
}

struct MachZehnderOptions {
    CommonOptions common;
    double theta = 45.0;
    std::string mode = "which-way";
    std::string delayed_mode;
};

int run_mach_zehnder_cmd(const MachZehnderOptions& opts) {
    MachZehnderModel model;
    model.theta_deg = opts.theta;
    model.second_bs_present = opts.mode == "interference";
    if (!opts.delayed_mode.empty())
        model.delayed_second_bs = opts.delayed_mode == "interference";

    const ScenarioReport report = run_mach_zehnder(model, opts.common.tolerance);
    std::vector<std::pair<std::string, std::string>> params{
        {"theta", format_g17(opts.theta)}, {"mode", opts.mode}};
    if (!opts.delayed_mode.empty())
        params.emplace_back("delayed_mode", opts.delayed_mode);
    return render_scenario(opts.common, "mach-zehnder", params, report);
}

// ------------------------------------------------------- relative-state ----

struct RelativeStateOptions {
    CommonOptions common;
    std::string state_path;
    std::string subject_spec;  // <subsystem>:<projector-file>, 1-based
    std::size_t object = 0;    // 1-based
};

int run_relative_state_cmd(const RelativeStateOptions& opts) {
    const StateFile file = read_state_file(opts.state_path);

    const std::size_t colon = opts.subject_spec.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 >= opts.subject_spec.size())
        throw Error(ErrorKind::parse_error,
                    "--subject takes <subsystem>:<projector-file>");
    std::size_t subject_1based = 0;
    try {
        subject_1based = std::stoul(opts.subject_spec.substr(0, colon));
    } catch (const std::exception&) {
        throw Error(ErrorKind::parse_error, "bad subject subsystem index");
    }
    const std::string projector_path = opts.subject_spec.substr(colon + 1);

    const std::size_t n = file.structure.num_subsystems();
    if (subject_1based < 1 || subject_1based > n)
        throw Error(ErrorKind::invalid_argument, "subject subsystem index out of range");
    if (opts.object < 1 || opts.object > n)
        throw Error(ErrorKind::invalid_argument, "object subsystem index out of range");
    const std::size_t subject = subject_1based - 1;
    const std::size_t object = opts.object - 1;

    const SubsystemEvent event{
        subject, read_projector_file(projector_path, file.structure.dim(subject))};

    DensityOperator direct{HilbertStructure({2}), CMatrix()};
    DensityOperator via_pair{HilbertStructure({2}), CMatrix()};
    if (file.kind == StateFileKind::vector) {
        const StateVector psi{file.structure, file.amplitudes};
        validate_state(psi);
        direct = relative_state(psi, event, object);
        via_pair = relative_state_via_pair_reduction(psi, event, object);
    } else {
        const DensityOperator rho{file.structure, file.matrix};
        validate_density(rho);
        direct = relative_state(rho, event, object);
        via_pair = relative_state_via_pair_reduction(rho, event, object);
    }
    const double deviation = max_abs_diff(direct.matrix, via_pair.matrix);

    return with_output(opts.common, [&](std::ostream& out) {
        if (opts.common.format == "machine") {
            out << "report relative-state\n";
            out << "subject " << subject_1based << '\n';
            out << "object " << opts.object << '\n';
            write_density(out, direct);
            out << "path_deviation " << format_g17(deviation) << '\n';
        } else {
            out << "relative state of subsystem " << opts.object
                << " given the subject event on subsystem " << subject_1based << ":\n";
            print_matrix(out, direct.matrix, "  ");
            char dev[32];
            std::snprintf(dev, sizeof dev, "%.3e", deviation);
            out << "max path deviation = " << dev << '\n';
        }
        return kExitOk;
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multipartite quantum states: collapse and relative-state descriptions"};
    app.require_subcommand(1);

    CheckOptions check_opts;
    CLI::App* check_cmd =
        app.add_subcommand("check", "Run the randomized equivalence checks");
    check_cmd->add_option("--trials", check_opts.trials, "Trials per check")
        ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()))
        ->capture_default_str();
    check_cmd->add_option("--seed", check_opts.seed, "Base seed")->capture_default_str();
    check_cmd
        ->add_option("--dims-pool", check_opts.pool_text,
                     "Subsystem dimension pool, e.g. 2x2,2x3x2")
        ->capture_default_str();
    add_common(check_cmd, check_opts.common);

    OneSlitOptions slit_opts;
    CLI::App* slit_cmd = app.add_subcommand("one-slit", "One-slit preparation scenario");
    slit_cmd->add_option("--cells", slit_opts.cells, "Transverse position cells")
        ->check(CLI::Range(std::size_t{2}, std::size_t{4096}))
        ->capture_default_str();
    slit_cmd->add_option("--slit", slit_opts.slit, "Slit cell indices, e.g. 0,1")
        ->required()
        ->delimiter(',');
    slit_cmd->add_option("--amps", slit_opts.amps_path,
                         "State file with the quanton's initial amplitudes (default uniform)");
    add_common(slit_cmd, slit_opts.common);

    MachZehnderOptions mz_opts;
    CLI::App* mz_cmd = app.add_subcommand("mach-zehnder", "Mach-Zehnder interferometer");
    mz_cmd->add_option("--theta", mz_opts.theta, "First beam splitter angle in degrees")
        ->check(CLI::Range(0.0, 180.0))
        ->capture_default_str();
    mz_cmd->add_option("--mode", mz_opts.mode, "Device configuration")
        ->check(CLI::IsMember({"which-way", "interference"}))
        ->capture_default_str();
    mz_cmd
        ->add_option("--delayed-choice", mz_opts.delayed_mode,
                     "Switch the device to this mode after preparation")
        ->check(CLI::IsMember({"which-way", "interference"}));
    add_common(mz_cmd, mz_opts.common);

    RelativeStateOptions rel_opts;
    CLI::App* rel_cmd = app.add_subcommand(
        "relative-state", "Relative state of one subsystem given a subject event");
    rel_cmd->add_option("--state", rel_opts.state_path, "Composite state file")->required();
    rel_cmd
        ->add_option("--subject", rel_opts.subject_spec,
                     "Subject as <subsystem>:<projector-file> (1-based)")
        ->required();
    rel_cmd->add_option("--object", rel_opts.object, "Object subsystem (1-based)")->required();
    add_common(rel_cmd, rel_opts.common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*check_cmd)
            return run_check(check_opts);
        if (*slit_cmd)
            return run_one_slit_cmd(slit_opts);
        if (*mz_cmd)
            return run_mach_zehnder_cmd(mz_opts);
        if (*rel_cmd)
            return run_relative_state_cmd(rel_opts);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.kind() == ErrorKind::parse_error ? kExitUsage : kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    }
    return kExitUsage;
}
