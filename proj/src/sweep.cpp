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

#include "eur/sweep.hpp"

#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "eur/bounds.hpp"
#include "eur/channel.hpp"

namespace eur {

namespace {

SweepRow evaluate_row(const SweepConfig& cfg, const DensityMatrix& rho0, const ProjectiveObservable& q,
                      const ProjectiveObservable& r_obs, double x) {
    SweepRow row;
    if (cfg.sweep_var == SweepVar::a) {
        row.a = x;
        row.r = unruh_r({x, cfg.omega});
    } else {
        row.r = x;
    }
    const auto rep = evaluate_eur(q, r_obs, apply_to_memory(unruh_channel(row.r), rho0));
    row.lhs = rep.lhs;
    row.berta = rep.berta_bound;
    row.holevo = rep.holevo_bound;
    row.delta = rep.delta;
    return row;
}

double parse_field(const std::string& field, std::size_t line) {
    double v = 0.0;
    const auto* first = field.data();
    const auto* last = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) {
        throw std::invalid_argument("parse_csv: line " + std::to_string(line) + ": bad number '" + field + "'");
    }
    return v;
}

}  // namespace

SweepConfig preset_config(Preset preset) {
    SweepConfig cfg;
    cfg.obs = {Axis::x, Axis::y};
    cfg.omega = kDefaultOmega;
    cfg.a_min = 0.0;
    cfg.a_max = default_a_max(cfg.omega);
    switch (preset) {
        case Preset::fig1:
            cfg.state = StateFamily::bell;
            cfg.p = 0.5;
            break;
        case Preset::fig2:
            cfg.state = StateFamily::x;
            cfg.p = 1.0;
            break;
    }
    return cfg;
}

void validate(const SweepConfig& cfg) {
    if (!(cfg.p >= 0.0 && cfg.p <= 1.0)) throw ConfigError("--p", "must lie in [0, 1]");
    if (!(std::isfinite(cfg.omega) && cfg.omega > 0.0)) throw ConfigError("--omega", "must be finite and > 0");
    if (!(std::isfinite(cfg.a_min) && cfg.a_min >= 0.0)) throw ConfigError("--a-min", "must be finite and >= 0");
    if (!(std::isfinite(cfg.a_max) && cfg.a_max >= 0.0)) throw ConfigError("--a-max", "must be finite and >= 0");
    if (cfg.a_min > cfg.a_max) throw ConfigError("--a-min", "must not exceed --a-max");
    if (cfg.sweep_var == SweepVar::r && cfg.a_max > std::numbers::pi / 4) {
        throw ConfigError("--a-max", "r sweeps must stay within [0, pi/4]");
    }
    if (cfg.steps < 2) throw ConfigError("--steps", "must be at least 2");
}

DensityMatrix initial_state(const SweepConfig& cfg) {
    return cfg.state == StateFamily::bell ? bell_diagonal_p(cfg.p) : x_state(cfg.p);
}

std::vector<double> sweep_grid(const SweepConfig& cfg) {
    validate(cfg);
    std::vector<double> grid(static_cast<std::size_t>(cfg.steps));
    const double span = cfg.a_max - cfg.a_min;
    const double last = static_cast<double>(cfg.steps - 1);
    for (int k = 0; k < cfg.steps; ++k) grid[k] = cfg.a_min + span * (static_cast<double>(k) / last);
    grid.back() = cfg.a_max;
    return grid;
}

std::vector<SweepRow> run_sweep_serial(const SweepConfig& cfg) {
    const auto grid = sweep_grid(cfg);
    const auto rho0 = initial_state(cfg);
    const auto q = pauli_observable(cfg.obs[0]);
    const auto r_obs = pauli_observable(cfg.obs[1]);
    std::vector<SweepRow> rows;
    rows.reserve(grid.size());
    for (double x : grid) rows.push_back(evaluate_row(cfg, rho0, q, r_obs, x));
    return rows;
}

std::vector<SweepRow> run_sweep(const SweepConfig& cfg) {
    const auto grid = sweep_grid(cfg);
    const auto rho0 = initial_state(cfg);
    const auto q = pauli_observable(cfg.obs[0]);
    const auto r_obs = pauli_observable(cfg.obs[1]);
    std::vector<SweepRow> rows(grid.size());
    const auto n = static_cast<std::ptrdiff_t>(grid.size());
    std::exception_ptr failure;
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t k = 0; k < n; ++k) {
        try {
            rows[k] = evaluate_row(cfg, rho0, q, r_obs, grid[k]);
        } catch (...) {
#pragma omp critical(eur_sweep_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return rows;
}

std::vector<std::string> row_violations(const std::vector<SweepRow>& rows) {
    std::vector<std::string> out;
    for (std::size_t k = 0; k < rows.size(); ++k) {
        const auto& row = rows[k];
        const std::string where = "row " + std::to_string(k) + " (r = " + format_number(row.r) + "): ";
        if (row.lhs < row.berta - kReportTolerance) out.push_back(where + "lhs below Berta bound");
        if (row.lhs < row.holevo - kReportTolerance) out.push_back(where + "lhs below Holevo bound");
        if (row.holevo < row.berta - 1e-12) out.push_back(where + "Holevo bound below Berta bound");
    }
    return out;
}

std::string format_number(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
    if (ec != std::errc()) throw std::runtime_error("format_number: conversion failed");
    return std::string(buf, ptr);
}

void write_csv(const std::vector<SweepRow>& rows, std::ostream& os) {
    os << kCsvHeader << '\n';
    for (const auto& row : rows) {
        if (row.a) os << format_number(*row.a);
        os << ',' << format_number(row.r) << ',' << format_number(row.lhs) << ',' << format_number(row.berta) << ','
           << format_number(row.holevo) << ',' << format_number(row.delta) << '\n';
    }
}

void emit_csv(const std::vector<SweepRow>& rows, const std::string& path) {
    if (rows.empty()) throw std::invalid_argument("emit_csv: no rows to write");
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    write_csv(rows, out);
    out.flush();
    if (!out) throw IoError("write to '" + path + "' failed");
}

std::vector<SweepRow> parse_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != kCsvHeader) throw std::invalid_argument("parse_csv: missing header");
    std::vector<SweepRow> rows;
    std::size_t lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        if (!line.empty() && line.back() == ',') fields.emplace_back();
        if (fields.size() != 6) {
            throw std::invalid_argument("parse_csv: line " + std::to_string(lineno) + ": expected 6 fields");
        }
        SweepRow row;
        if (!fields[0].empty()) row.a = parse_field(fields[0], lineno);
        row.r = parse_field(fields[1], lineno);
        row.lhs = parse_field(fields[2], lineno);
        row.berta = parse_field(fields[3], lineno);
        row.holevo = parse_field(fields[4], lineno);
        row.delta = parse_field(fields[5], lineno);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace eur
