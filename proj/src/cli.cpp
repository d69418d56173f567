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

#include "fxr/cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>

#include "fxr/errors.hpp"
#include "fxr/fxr_solver.hpp"
#include "fxr/hamming_search.hpp"
#include "fxr/simulator.hpp"

namespace fxr::cli {
namespace {

using nlohmann::json;

constexpr double kPi = std::numbers::pi;

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

double parse_number(std::string_view s, std::string_view whole) {
    double value = 0;
    const char *first = s.data();
    if (!s.empty() && s.front() == '+') {
        ++first;
    }
    const auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(value)) {
        throw std::invalid_argument("malformed angle: " + std::string(whole));
    }
    return value;
}

std::pair<std::string, std::string> free_names(Mode mode) {
    return mode == Mode::kAlphaFixed ? std::pair{"beta1", "beta2"} : std::pair{"alpha1", "alpha2"};
}

void write_json(std::ostream &out, const json &j, bool pretty) {
    out << (pretty ? j.dump(2) : j.dump()) << '\n';
}

// Classifies an exception from the numeric core into an exit code.
int report_error(std::ostream &err, const std::exception &e) {
    err << "error: " << e.what() << '\n';
    if (dynamic_cast<const IterationCountTooSmall *>(&e) || dynamic_cast<const DegenerateAngleError *>(&e) ||
        dynamic_cast<const InfeasibleScheduleError *>(&e)) {
        return kExitInfeasible;
    }
    if (dynamic_cast<const std::invalid_argument *>(&e) || dynamic_cast<const NotImplementedError *>(&e) ||
        dynamic_cast<const ResourceLimitError *>(&e)) {
        return kExitUsage;
    }
    return kExitInternal;
}

void write_xy(std::ostream &out, const std::vector<CurvePoint> &points) {
    out << "x,y\n";
    for (const CurvePoint &p : points) {
        out << format_double(p.x) << ',' << format_double(p.y) << '\n';
    }
}

json schedule_json(const Schedule &schedule) {
    json steps = json::array();
    for (const Step &s : schedule.steps()) {
        steps.push_back({{"op", s.kind == Step::Kind::kOracle ? "oracle" : "diffusion"}, {"angle", s.angle}});
    }
    return steps;
}

struct SweepCell {
    Mode mode;
    double lambda;
    double fixed_angle;
    int k_offset;  // used when k is not given explicitly
    std::optional<int> k;
};

struct SweepRow {
    std::optional<int> k;
    std::optional<double> k_lower;
    std::optional<ParamSolution> solution;
    std::string status;
};

SweepRow run_cell(const SweepCell &cell) {
    SweepRow row;
    try {
        const SearchSpec spec = SearchSpec::from_fraction(cell.lambda);
        row.k_lower = k_lower(cell.fixed_angle, spec);
        row.k = cell.k ? *cell.k : static_cast<int>(std::ceil(*row.k_lower)) + cell.k_offset;
        row.solution = solve_free_pair(cell.fixed_angle, spec, cell.mode, *row.k);
        row.status = "certified";
    } catch (const DegenerateAngleError &) {
        row.status = "degenerate-angle";
    } catch (const IterationCountTooSmall &) {
        row.status = "iteration-count-too-small";
    } catch (const std::invalid_argument &) {
        row.status = "invalid-input";
    } catch (const std::exception &) {
        row.status = "failed";
    }
    return row;
}

}  // namespace

double parse_angle(std::string_view text) {
    const std::string_view s = trim(text);
    if (s.size() >= 2 && s.substr(s.size() - 2) == "pi") {
        std::string_view coef = trim(s.substr(0, s.size() - 2));
        if (!coef.empty() && coef.back() == '*') {
            coef = trim(coef.substr(0, coef.size() - 1));
            if (coef.empty()) {
                throw std::invalid_argument("malformed angle: " + std::string(text));
            }
        }
        if (coef.empty() || coef == "+") {
            return kPi;
        }
        if (coef == "-") {
            return -kPi;
        }
        return parse_number(coef, text) * kPi;
    }
    return parse_number(s, text);
}

std::vector<double> parse_angle_list(std::string_view text) {
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
        out.push_back(parse_angle(text.substr(start, end - start)));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

Mode parse_mode(std::string_view text) {
    if (text == "alpha") {
        return Mode::kAlphaFixed;
    }
    if (text == "beta") {
        return Mode::kBetaFixed;
    }
    throw std::invalid_argument("mode must be alpha or beta");
}

std::string format_double(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
    return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

SolveReport SolveReport::from_solution(const ParamSolution &solution, double lambda, double k_lower) {
    SolveReport r;
    r.mode = solution.mode;
    r.fixed_angle = solution.fixed_angle;
    r.lambda = lambda;
    r.k = solution.k;
    r.free_pair = solution.free_pair;
    r.rotation_angle_phi = solution.rotation_angle_phi;
    r.residual_real = solution.residual_real;
    r.residual_imag = solution.residual_imag;
    r.k_lower = k_lower;
    r.success_probability = solution.certified_success_prob;
    return r;
}

json to_json(const SolveReport &r) {
    const auto [first, second] = free_names(r.mode);
    json j = {
        {"mode", std::string(mode_name(r.mode))},
        {"fixed_angle", r.fixed_angle},
        {"lambda", r.lambda},
        {"k", r.k},
        {"free_pair", {{first, r.free_pair.first}, {second, r.free_pair.second}}},
        {"rotation_angle_phi", r.rotation_angle_phi},
        {"residual_real", r.residual_real},
        {"residual_imag", r.residual_imag},
        {"k_lower", r.k_lower},
        {"success_probability", r.success_probability},
        {"certified", r.success_probability >= kCertifiedThreshold},
    };
    if (r.wall_time_seconds) {
        j["wall_time_seconds"] = *r.wall_time_seconds;
    }
    return j;
}

SolveReport report_from_json(const json &j) {
    SolveReport r;
    r.mode = parse_mode(j.at("mode").get<std::string>());
    r.fixed_angle = j.at("fixed_angle").get<double>();
    r.lambda = j.at("lambda").get<double>();
    r.k = j.at("k").get<int>();
    const auto [first, second] = free_names(r.mode);
    r.free_pair = {j.at("free_pair").at(first).get<double>(), j.at("free_pair").at(second).get<double>()};
    r.rotation_angle_phi = j.at("rotation_angle_phi").get<double>();
    r.residual_real = j.at("residual_real").get<double>();
    r.residual_imag = j.at("residual_imag").get<double>();
    r.k_lower = j.at("k_lower").get<double>();
    r.success_probability = j.at("success_probability").get<double>();
    if (j.contains("wall_time_seconds")) {
        r.wall_time_seconds = j.at("wall_time_seconds").get<double>();
    }
    return r;
}

int cmd_solve(const SolveOptions &o, std::ostream &out, std::ostream &err) {
    const auto start = std::chrono::steady_clock::now();
    try {
        const SearchSpec spec = SearchSpec::from_fraction(o.lambda);
        const double lower = k_lower(o.fixed_angle, spec);
        const ParamSolution solution = solve_free_pair(o.fixed_angle, spec, o.mode, o.k);
        SolveReport report = SolveReport::from_solution(solution, o.lambda, lower);
        if (o.timing) {
            report.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        }
        write_json(out, to_json(report), o.pretty);
        return kExitOk;
    } catch (const IterationCountTooSmall &e) {
        err << "error: " << e.what() << " (k_lower=" << e.k_lower() << ")\n";
        write_json(out, {{"status", "iteration-count-too-small"}, {"k", o.k}, {"k_lower", e.k_lower()}}, o.pretty);
        return kExitInfeasible;
    } catch (const std::exception &e) {
        return report_error(err, e);
    }
}

int cmd_curve(const CurveOptions &o, std::ostream &out, std::ostream &err) {
    try {
        const SearchSpec spec = SearchSpec::from_fraction(o.lambda);
        const CurveF curve = trace_curve(o.fixed_angle, spec, o.mode, o.points);
        if (o.which == CurveOptions::Which::kF) {
            write_xy(out, curve.samples());
            return kExitOk;
        }
        const GCurve g = trace_g(curve);
        out << "# phi0=" << format_double(g.phi0) << ",pi_minus_phi0=" << format_double(kPi - g.phi0) << '\n';
        write_xy(out, g.samples);
        return kExitOk;
    } catch (const std::exception &e) {
        return report_error(err, e);
    }
}

int cmd_sweep(const SweepOptions &o, std::ostream &out, std::ostream &err) {
    std::vector<double> fixed = o.fixed_angles;
    if (fixed.empty()) {
        for (int j = 0; j < 10; ++j) {
            fixed.push_back((0.1 + 0.2 * j) * kPi);
        }
    }
    std::vector<SweepCell> cells;
    for (Mode mode : o.modes) {
        for (double lambda : o.lambdas) {
            for (double angle : fixed) {
                if (o.ks.empty()) {
                    for (int offset : o.k_offsets) {
                        cells.push_back({mode, lambda, angle, offset, std::nullopt});
                    }
                } else {
                    for (int k : o.ks) {
                        cells.push_back({mode, lambda, angle, 0, k});
                    }
                }
            }
        }
    }

    std::vector<SweepRow> rows(cells.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) {
            rows[i] = run_cell(cells[i]);
        }
    };
    unsigned threads = o.threads ? o.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(cells.size(), 1)));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) {
        pool.emplace_back(worker);
    }
    worker();
    for (std::thread &t : pool) {
        t.join();
    }

    out << "mode,lambda,fixed_angle,k,k_lower,first,second,residual_real,residual_imag,success,status\n";
    bool failed = false;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const SweepCell &c = cells[i];
        const SweepRow &r = rows[i];
        out << mode_name(c.mode) << ',' << format_double(c.lambda) << ',' << format_double(c.fixed_angle) << ','
            << (r.k ? std::to_string(*r.k) : "") << ',' << (r.k_lower ? format_double(*r.k_lower) : "") << ',';
        if (r.solution) {
            const ParamSolution &s = *r.solution;
            out << format_double(s.free_pair.first) << ',' << format_double(s.free_pair.second) << ','
                << format_double(s.residual_real) << ',' << format_double(s.residual_imag) << ','
                << format_double(s.certified_success_prob);
        } else {
            out << ",,,,";
        }
        out << ',' << r.status << '\n';
        failed = failed || r.status == "failed";
    }
    if (failed) {
        err << "error: at least one sweep cell failed certification\n";
        return kExitInternal;
    }
    return kExitOk;
}

int cmd_hamming(const HammingOptions &o, std::ostream &out, std::ostream &err) {
    try {
        std::vector<int> secret;
        if (o.secret) {
            secret = parse_digits(*o.secret);
            if (o.length && *o.length != static_cast<int>(secret.size())) {
                throw std::invalid_argument("--n does not match the length of --secret");
            }
        } else if (o.seed && o.length) {
            secret = random_secret(o.alphabet, *o.length, *o.seed);
        } else {
            throw std::invalid_argument("give --secret, or --n together with --random-secret");
        }
        const HammingInstance instance(o.alphabet, secret);
        const HammingResult result = identify_secret(instance);
        json j = {
            {"alphabet", instance.alphabet()},
            {"length", instance.length()},
            {"secret", format_digits(instance.secret())},
            {"recovered", format_digits(result.recovered)},
            {"correct", result.recovered == instance.secret()},
            {"secret_probability", result.secret_mass},
            {"k_iter", result.plan.k_iter},
            {"phase_oracle_queries", result.oracle_queries},
            {"general_phase_oracle_queries", result.general_phase_queries},
            {"beta1", result.plan.solution.free_pair.first},
            {"beta2", result.plan.solution.free_pair.second},
        };
        write_json(out, j, o.pretty);
        return kExitOk;
    } catch (const std::exception &e) {
        return report_error(err, e);
    }
}

int cmd_classic(const ClassicOptions &o, std::ostream &out, std::ostream &err) {
    try {
        const SearchSpec spec = SearchSpec::from_fraction(o.lambda);
        const ClassicSchedule c = classic_params(o.method, spec);
        const double success = run_2d(c.schedule, spec).success();
        json params = json::object();
        for (const auto &[name, value] : c.params) {
            params[name] = value;
        }
        json j = {
            {"method", std::string(method_name(c.method))},
            {"lambda", o.lambda},
            {"k_opt", c.k_opt},
            {"k", c.k_used},
            {"params", params},
            {"oracle_calls", c.schedule.oracle_count()},
            {"schedule", schedule_json(c.schedule)},
            {"success_probability", success},
            {"certified", success >= kCertifiedThreshold},
        };
        write_json(out, j, o.pretty);
        return success >= kCertifiedThreshold ? kExitOk : kExitInternal;
    } catch (const std::exception &e) {
        return report_error(err, e);
    }
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exact quantum search by fixed-axis rotation: parameter solver and simulators"};
    app.require_subcommand(1);

    std::string mode = "alpha", fixed, lambda_text;
    double lambda = 0;
    int k = 0;
    bool pretty = false, timing = false;

    auto *solve = app.add_subcommand("solve", "Solve the free phase pair for one instance (JSON)");
    solve->add_option("--mode", mode, "Which phase is fixed: alpha or beta")->check(CLI::IsMember({"alpha", "beta"}));
    solve->add_option("--fixed", fixed, "Fixed phase, radians or e.g. 0.6pi")->required();
    solve->add_option("--lambda", lambda, "Marked fraction in (0, 1)")->required();
    solve->add_option("--k", k, "Number of composite steps")->required();
    solve->add_flag("--pretty", pretty, "Indent the JSON output");
    solve->add_flag("--json", "JSON output (default)");
    solve->add_flag("--timing", timing, "Include wall time in the report");

    std::string which = "f";
    int points = kDefaultGridPoints;
    auto *curve = app.add_subcommand("curve", "Constraint curve f or half rotation angle g (CSV)");
    curve->add_option("--which", which, "f or g")->check(CLI::IsMember({"f", "g"}));
    curve->add_option("--mode", mode, "alpha or beta")->check(CLI::IsMember({"alpha", "beta"}));
    curve->add_option("--fixed", fixed, "Fixed phase")->required();
    curve->add_option("--lambda", lambda, "Marked fraction")->required();
    curve->add_option("--points", points, "Base grid size")->check(CLI::Range(2, 1 << 22));

    std::string modes_text = "alpha", fixed_list, lambda_list, k_list, offset_list;
    unsigned threads = 0;
    auto *sweep = app.add_subcommand("sweep", "Solve a grid of instances (CSV)");
    sweep->add_option("--mode", modes_text, "alpha, beta or both")->check(CLI::IsMember({"alpha", "beta", "both"}));
    sweep->add_option("--lambda", lambda_list, "Comma-separated marked fractions");
    sweep->add_option("--fixed", fixed_list, "Comma-separated fixed phases");
    sweep->add_option("--k", k_list, "Comma-separated explicit step counts");
    sweep->add_option("--k-offsets", offset_list, "Comma-separated offsets above ceil(k_lower)");
    sweep->add_option("--threads", threads, "Worker threads (0 = all cores)");

    int alphabet = 5, length = 0;
    std::string secret;
    std::uint64_t seed = 0;
    auto *hamming = app.add_subcommand("hamming", "Recover a secret string from a distance-parity oracle (JSON)");
    hamming->add_option("--k", alphabet, "Alphabet size (>= 5)")->required();
    auto *n_opt = hamming->add_option("--n", length, "String length");
    auto *secret_opt = hamming->add_option("--secret", secret, "Secret digits, e.g. 3,1");
    auto *seed_opt = hamming->add_option("--random-secret", seed, "Draw the secret from this seed");
    secret_opt->excludes(seed_opt);
    seed_opt->needs(n_opt);
    hamming->add_flag("--pretty", pretty, "Indent the JSON output");

    std::string method;
    auto *classic = app.add_subcommand("classic", "Earlier exact-search schedules (JSON)");
    classic->add_option("--method", method, "bss, conj or 3d")->required()->check(CLI::IsMember({"bss", "conj", "3d"}));
    classic->add_option("--lambda", lambda, "Marked fraction")->required();
    classic->add_flag("--pretty", pretty, "Indent the JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    auto split_ints = [](const std::string &text) {
        std::vector<int> v;
        for (double x : parse_angle_list(text)) {
            if (x != std::floor(x)) {
                throw std::invalid_argument("expected integers: " + text);
            }
            v.push_back(static_cast<int>(x));
        }
        return v;
    };

    try {
        if (*solve) {
            return cmd_solve({parse_mode(mode), parse_angle(fixed), lambda, k, pretty, timing}, out, err);
        }
        if (*curve) {
            CurveOptions o;
            o.which = which == "g" ? CurveOptions::Which::kG : CurveOptions::Which::kF;
            o.mode = parse_mode(mode);
            o.fixed_angle = parse_angle(fixed);
            o.lambda = lambda;
            o.points = points;
            return cmd_curve(o, out, err);
        }
        if (*sweep) {
            SweepOptions o;
            if (modes_text == "both") {
                o.modes = {Mode::kAlphaFixed, Mode::kBetaFixed};
            } else {
                o.modes = {parse_mode(modes_text)};
            }
            if (!lambda_list.empty()) {
                o.lambdas = parse_angle_list(lambda_list);
            }
            if (!fixed_list.empty()) {
                o.fixed_angles = parse_angle_list(fixed_list);
            }
            if (!k_list.empty()) {
                o.ks = split_ints(k_list);
            }
            if (!offset_list.empty()) {
                o.k_offsets = split_ints(offset_list);
            }
            o.threads = threads;
            return cmd_sweep(o, out, err);
        }
        if (*hamming) {
            HammingOptions o;
            o.alphabet = alphabet;
            if (*n_opt) {
                o.length = length;
            }
            if (*secret_opt) {
                o.secret = secret;
            }
            if (*seed_opt) {
                o.seed = seed;
            }
            o.pretty = pretty;
            return cmd_hamming(o, out, err);
        }
        if (*classic) {
            return cmd_classic({parse_method(method), lambda, pretty}, out, err);
        }
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n' << app.help();
        return kExitUsage;
    }
    err << app.help();
    return kExitUsage;
}

}  // namespace fxr::cli
