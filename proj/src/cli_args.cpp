// Copyright 2026 The eur Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "eur/cli.hpp"

#include <CLI11.hpp>

#include <numbers>
#include <ostream>

namespace eur::cli {

namespace {

Axis parse_axis(const std::string& s) {
    if (s == "x") return Axis::x;
    if (s == "y") return Axis::y;
    if (s == "z") return Axis::z;
    throw UsageError("--obs: unknown axis '" + s + "' (expected x, y or z)");
}

std::array<Axis, 2> parse_obs(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos || s.find(',', comma + 1) != std::string::npos) {
        throw UsageError("--obs: expected two comma-separated axes, e.g. x,y");
    }
    return {parse_axis(s.substr(0, comma)), parse_axis(s.substr(comma + 1))};
}

}  // namespace

SweepConfig parse_args(const std::vector<std::string>& args) {
    CLI::App app{"Entropic uncertainty bounds under the fermionic Unruh channel", "eur"};
    app.require_subcommand(1);
    auto* sweep = app.add_subcommand("sweep", "Sweep acceleration (or r) and write CSV rows");

    std::string preset, state, obs, sweep_var, out;
    double p = 0.0, omega = 0.0, a_min = 0.0, a_max = 0.0;
    int steps = 0;

    sweep->add_option("--preset", preset, "Scenario preset")->check(CLI::IsMember({"fig1", "fig2"}));
    sweep->add_option("--state", state, "Initial state family")->check(CLI::IsMember({"bell", "x"}));
    auto* p_opt = sweep->add_option("--p", p, "State mixing parameter in [0, 1]");
    auto* obs_opt = sweep->add_option("--obs", obs, "Observable pair, e.g. x,y");
    auto* omega_opt = sweep->add_option("--omega", omega, "Dirac mode frequency (> 0)");
    auto* a_min_opt = sweep->add_option("--a-min", a_min, "Lower end of the sweep range");
    auto* a_max_opt = sweep->add_option("--a-max", a_max, "Upper end of the sweep range");
    auto* steps_opt = sweep->add_option("--steps", steps, "Number of samples (>= 2)");
    sweep->add_option("--sweep-var", sweep_var, "Sweep variable")->check(CLI::IsMember({"a", "r"}));
    sweep->add_option("--out", out, "Output CSV path (default: stdout)");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    if (argv.empty()) argv.push_back("eur");
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested(app.help("", CLI::AppFormatMode::All));
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    SweepConfig cfg = preset == "fig2" ? preset_config(Preset::fig2) : preset_config(Preset::fig1);
    if (!state.empty()) cfg.state = state == "x" ? StateFamily::x : StateFamily::bell;
    if (p_opt->count()) cfg.p = p;
    if (obs_opt->count()) cfg.obs = parse_obs(obs);
    if (omega_opt->count()) cfg.omega = omega;
    if (!sweep_var.empty()) cfg.sweep_var = sweep_var == "r" ? SweepVar::r : SweepVar::a;
    if (a_min_opt->count()) cfg.a_min = a_min;
    if (a_max_opt->count()) {
        cfg.a_max = a_max;
    } else {
        cfg.a_max = cfg.sweep_var == SweepVar::r ? std::numbers::pi / 4 : default_a_max(cfg.omega);
    }
    if (steps_opt->count()) cfg.steps = steps;
    cfg.out_path = out;

    try {
        validate(cfg);
    } catch (const ConfigError& e) {
        throw UsageError(e.what());
    }
    return cfg;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    SweepConfig cfg;
    try {
        cfg = parse_args(args);
    } catch (const HelpRequested& h) {
        out << h.what();
        return kSuccess;
    } catch (const UsageError& e) {
        err << "eur: usage error: " << e.what() << "\nRun 'eur sweep --help' for options.\n";
        return kUsage;
    }

    std::vector<SweepRow> rows;
    try {
        rows = run_sweep(cfg);
    } catch (const std::exception& e) {
        err << "eur: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (cfg.out_path.empty()) {
            write_csv(rows, out);
            out.flush();
            if (!out) throw IoError("write to standard output failed");
        } else {
            emit_csv(rows, cfg.out_path);
        }
    } catch (const IoError& e) {
        err << "eur: I/O error: " << e.what() << '\n';
        return kIo;
    }

    const auto violations = row_violations(rows);
    for (const auto& v : violations) err << "eur: invariant violation: " << v << '\n';
    return violations.empty() ? kSuccess : kInvariantViolation;
}

}  // namespace eur::cli
