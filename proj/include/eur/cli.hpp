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

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "eur/sweep.hpp"

namespace eur::cli {

enum ExitCode : int {
    kSuccess = 0,
    kUsage = 2,
    kInvariantViolation = 3,
    kIo = 4,
};

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// `--help` was given; `what()` holds the help text.
struct HelpRequested : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parses `eur sweep [flags]`. `args[0]` is the program name. Preset values
/// are applied first and explicit flags override them. Throws UsageError on
/// unknown flags, malformed numbers or constraint violations.
SweepConfig parse_args(const std::vector<std::string>& args);

/// Full command: parse, sweep, write CSV, check row invariants. Returns an
/// ExitCode; diagnostics go to `err`, CSV to `out` when no --out is given.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eur::cli
