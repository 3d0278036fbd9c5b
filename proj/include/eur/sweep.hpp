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

#pragma once

#include <array>
#include <iosfwd>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "eur/measurement.hpp"
#include "eur/state.hpp"

namespace eur {

enum class StateFamily { bell, x };
enum class SweepVar { a, r };

/// An invalid sweep configuration; `field()` names the offending flag.
class ConfigError : public std::invalid_argument {
public:
    ConfigError(std::string field, const std::string& message)
        : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr double kDefaultOmega = 0.1;

/// a_max that takes cos r from 1 to within about 1% of 1/sqrt(2).
constexpr double default_a_max(double omega) { return 20.0 * omega * 2.0 * std::numbers::pi; }

struct SweepConfig {
    StateFamily state = StateFamily::bell;
    double p = 0.5;
    std::array<Axis, 2> obs{Axis::x, Axis::y};
    double omega = kDefaultOmega;
    /// Range of the sweep variable: accelerations for SweepVar::a, Rindler
    /// angles in [0, pi/4] for SweepVar::r.
    double a_min = 0.0;
    double a_max = default_a_max(kDefaultOmega);
    int steps = 101;
    SweepVar sweep_var = SweepVar::a;
    /// Empty writes to standard output.
    std::string out_path;
};

enum class Preset { fig1, fig2 };

/// fig1: Bell-diagonal p = 1/2; fig2: X state p = 1. Both measure sigma_x,
/// sigma_y with omega = 0.1 over the default acceleration grid.
SweepConfig preset_config(Preset preset);

/// Throws ConfigError naming the first invalid field.
void validate(const SweepConfig& cfg);

struct SweepRow {
    std::optional<double> a;  // empty when sweeping r directly
    double r = 0.0;
    double lhs = 0.0;
    double berta = 0.0;
    double holevo = 0.0;
    double delta = 0.0;
};

DensityMatrix initial_state(const SweepConfig& cfg);

/// Sample points of the sweep variable, ascending, endpoints exact.
std::vector<double> sweep_grid(const SweepConfig& cfg);

/// Rows evaluated in parallel (OpenMP), emitted in sweep order.
std::vector<SweepRow> run_sweep(const SweepConfig& cfg);

/// Single-threaded reference; bit-identical to run_sweep.
std::vector<SweepRow> run_sweep_serial(const SweepConfig& cfg);

/// Descriptions of rows that break lhs >= berta, lhs >= holevo (1e-9) or
/// holevo >= berta (1e-12). Empty when all rows are consistent.
std::vector<std::string> row_violations(const std::vector<SweepRow>& rows);

inline constexpr const char* kCsvHeader = "a,r,lhs,berta,holevo,delta";

/// `%.12g` with '.' decimal separator regardless of locale.
std::string format_number(double v);

void write_csv(const std::vector<SweepRow>& rows, std::ostream& os);

/// Overwrites `path`. Throws IoError naming the path on failure.
void emit_csv(const std::vector<SweepRow>& rows, const std::string& path);

/// Parses CSV produced by write_csv; throws std::invalid_argument on
/// malformed input.
std::vector<SweepRow> parse_csv(std::istream& is);

}  // namespace eur
