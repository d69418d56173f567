// Copyright 2026 The FXR Search Authors
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

// Command-line front end. Every command writes its machine-readable result to
// `out`, diagnostics to `err`, and returns a process exit code.

#ifndef FXR_CLI_HPP
#define FXR_CLI_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fxr/classic_exact.hpp"
#include "fxr/param_solution.hpp"

namespace fxr::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitInfeasible = 2,
    kExitUsage = 64,
    kExitInternal = 70,
};

/// Radians, or a multiple of pi written "pi", "-pi", "0.6pi" or "0.6*pi".
double parse_angle(std::string_view text);

/// Comma-separated list of parse_angle values.
std::vector<double> parse_angle_list(std::string_view text);

Mode parse_mode(std::string_view text);

/// 17 significant digits, enough to read back the identical double.
std::string format_double(double value);

struct SolveReport {
    Mode mode = Mode::kAlphaFixed;
    double fixed_angle = 0;
    double lambda = 0;
    int k = 0;
    std::pair<double, double> free_pair{0, 0};
    double rotation_angle_phi = 0;
    double residual_real = 0;
    double residual_imag = 0;
    double k_lower = 0;
    double success_probability = 0;
    std::optional<double> wall_time_seconds;

    static SolveReport from_solution(const ParamSolution &solution, double lambda, double k_lower);
    bool operator==(const SolveReport &) const = default;
};

nlohmann::json to_json(const SolveReport &report);
SolveReport report_from_json(const nlohmann::json &j);

struct SolveOptions {
    Mode mode = Mode::kAlphaFixed;
    double fixed_angle = 0;
    double lambda = 0;
    int k = 0;
    bool pretty = false;
    bool timing = false;
};
int cmd_solve(const SolveOptions &options, std::ostream &out, std::ostream &err);

struct CurveOptions {
    enum class Which { kF, kG };
    Which which = Which::kF;
    Mode mode = Mode::kAlphaFixed;
    double fixed_angle = 0;
    double lambda = 0;
    int points = 4096;
};
int cmd_curve(const CurveOptions &options, std::ostream &out, std::ostream &err);

struct SweepOptions {
    std::vector<Mode> modes{Mode::kAlphaFixed};
    std::vector<double> lambdas{0.01, 0.05, 0.1, 0.2, 0.333, 0.5, 0.75};
    std::vector<double> fixed_angles;  ///< empty means 0.1pi, 0.3pi, ..., 1.9pi
    std::vector<int> k_offsets{1, 2, 5};
    std::vector<int> ks;               ///< explicit k values; overrides k_offsets
    unsigned threads = 0;              ///< 0 means hardware concurrency
};
int cmd_sweep(const SweepOptions &options, std::ostream &out, std::ostream &err);

struct HammingOptions {
    int alphabet = 5;
    std::optional<int> length;
    std::optional<std::string> secret;
    std::optional<std::uint64_t> seed;
    bool pretty = false;
};
int cmd_hamming(const HammingOptions &options, std::ostream &out, std::ostream &err);

struct ClassicOptions {
    ClassicMethod method = ClassicMethod::kThreeDRotation;
    double lambda = 0;
    bool pretty = false;
};
int cmd_classic(const ClassicOptions &options, std::ostream &out, std::ostream &err);

/// Parses argv and dispatches to a command.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace fxr::cli

#endif  // FXR_CLI_HPP
