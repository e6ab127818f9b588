// Copyright 2026 The LARC Authors
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

// Command-line front end: config ingestion, dispatch and reports.

#pragma once

#include "larc/matrix_io.hpp"
#include "larc/model.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace larc::cli {

enum ExitCode : int {
    kOk = 0,
    kInternal = 1,
    kConfigError = 2,
    kMembershipRejected = 3,
    kBudgetExhausted = 4,
};

struct Tolerances {
    double rank_tol = 1e-9;
    double closure_tol = 1e-9;
    double eps_V = 1e-6;
    double jac_tol = 1e-6;
    double eps = 1e-6;
    double membership_tol = 1e-8;
};

struct Budgets {
    std::int64_t recurrence = 10'000'000;
    std::int64_t powers = 1'000'000;
    std::int64_t newton_iters = 60;
    std::int64_t conjugator_tries = 4000;
};

struct SamplingConfig {
    std::string strategy;  // "random", "grid" or "exhaustive"
    std::size_t count = 1000;
    int points_per_axis = 5;
    std::size_t window = 0;
};

struct RunConfig {
    Index n = 0;
    std::size_t m = 0;
    HamiltonianModel model;
    ControlSet controls;
    SamplingConfig sampling;
    Tolerances tolerances;
    Budgets budgets;
    std::uint64_t seed = 0;
    std::string hash;  // FNV-1a of the canonical config text
};

// Throws ParseError naming the offending field.
RunConfig parse_run_config(const io::Json& j, std::optional<std::uint64_t> seed_override = std::nullopt);
RunConfig load_run_config(const std::string& path, std::optional<std::uint64_t> seed_override = std::nullopt);

std::string fnv1a_hex(const std::string& text);

// Echo of version, hash, seed, tolerances and budgets.
io::Json report_header(const RunConfig& config, const std::string& command);

// Full CLI. Reports go to `out`, diagnostics and the summary line to `err`.
// Reads LARC_SEED from the environment.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace larc::cli
