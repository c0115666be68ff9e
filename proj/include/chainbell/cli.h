// Copyright 2026 The chainbell Authors
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

#ifndef CHAINBELL_CLI_H
#define CHAINBELL_CLI_H

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "chainbell/robust.h"

namespace chainbell::cli {

enum class Command { certify, optimize, swap, robustness, randomness, curves };
enum class Format { json, csv, text };

const char *command_name(Command c);
const char *format_name(Format f);

/// Exit statuses returned by run().
enum ExitCode : int { kOk = 0, kUsage = 1, kCertificationFailed = 2, kNumericFailure = 3 };

struct RunConfig {
    Command command = Command::certify;
    int n = 3;
    std::vector<int> n_list;
    int dim = 2;
    uint64_t seed = 1;
    int restarts = 0;
    std::optional<double> epsilon;
    std::vector<double> eps_grid;
    std::vector<double> r_grid;
    double tol = 1e-9;
    std::string out;
    Format format = Format::text;
    BoundKind which = BoundKind::state;
    bool timestamp = true;
};

/// Parses "start:stop:step", "start:stop" (with default_step) or a comma
/// list. The endpoint is included. Throws std::invalid_argument on a
/// malformed, empty or unsorted grid.
std::vector<double> parse_grid(const std::string &spec, double default_step);

/// Parses a comma list of integers.
std::vector<int> parse_int_list(const std::string &spec);

/// One CSV row per (n, r) in the curve family, sorted by (n, r).
std::string curves_csv(const std::vector<int> &n_list, const std::vector<double> &r_grid, BoundKind which);

/// Entry point. args excludes the program name. Reports go to `out` unless a
/// file destination applies; diagnostics go to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace chainbell::cli

#endif
