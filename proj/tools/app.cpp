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

#include "app.hpp"

#include "larc/chart.hpp"
#include "larc/closure.hpp"
#include "larc/density.hpp"
#include "larc/errors.hpp"
#include "larc/oracle.hpp"
#include "larc/program.hpp"
#include "larc/synthesis.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <ostream>

#ifndef LARC_VERSION
#define LARC_VERSION "0.0.0"
#endif

namespace larc::cli {

namespace {

constexpr const char* kVersion = LARC_VERSION;

double positive_double(const io::Json& obj, const char* key, double fallback, const std::string& where) {
    if (!obj.contains(key)) return fallback;
    const auto& v = obj[key];
    if (!v.is_number()) throw ParseError(where + "." + key + ": expected a number");
    const double x = v.get<double>();
    if (!(x > 0.0) || !std::isfinite(x)) throw ParseError(where + "." + key + ": must be finite and > 0");
    return x;
}

std::int64_t positive_int(const io::Json& obj, const char* key, std::int64_t fallback, const std::string& where) {
    if (!obj.contains(key)) return fallback;
    const auto& v = obj[key];
    if (!v.is_number_integer()) throw ParseError(where + "." + key + ": expected an integer");
    const auto x = v.get<std::int64_t>();
    if (x < 1) throw ParseError(where + "." + key + ": must be >= 1");
    return x;
}

const io::Json& object_field(const io::Json& j, const char* key) {
    static const io::Json empty = io::Json::object();
    if (!j.contains(key)) return empty;
    if (!j[key].is_object()) throw ParseError(std::string(key) + ": expected an object");
    return j[key];
}

std::optional<std::uint64_t> env_seed() {
    const char* s = std::getenv("LARC_SEED");
    if (s == nullptr || *s == '\0') return std::nullopt;
    char* end = nullptr;
    errno = 0;
    const unsigned long long v = std::strtoull(s, &end, 10);
    if (errno != 0 || end == s || *end != '\0' || *s == '-') {
        throw ParseError(std::string("LARC_SEED: not an unsigned integer: \"") + s + "\"");
    }
    return static_cast<std::uint64_t>(v);
}

SamplingStrategy strategy_of(const RunConfig& c) {
    if (c.sampling.strategy == "grid") return GridStrategy{c.sampling.points_per_axis};
    if (c.sampling.strategy == "exhaustive") return ExhaustiveStrategy{};
    return RandomStrategy{c.sampling.count};
}

struct Analysis {
    GeneratorSet gens;
    LieBasis basis;
    ControllabilityVerdict verdict;
};

Analysis analyze(const RunConfig& c) {
    Analysis a;
    SamplingOptions so;
    so.rank_tol = c.tolerances.rank_tol;
    so.stabilization_window = c.sampling.window;
    a.gens = sample_generators(c.model, c.controls, strategy_of(c), so);
    if (a.gens.size() == 0) {
        a.basis.n = c.n;
        a.basis.d = 0;
    } else {
        ClosureOptions co;
        co.closure_tol = c.tolerances.closure_tol;
        a.basis = lie_closure(a.gens, co);
    }
    a.verdict = classify(a.basis);
    return a;
}

io::Json sampling_json(const RunConfig& c, const GeneratorSet& g) {
    io::Json s = io::Json::object();
    s["strategy"] = c.sampling.strategy;
    s["samples_evaluated"] = g.samples_evaluated;
    s["window_used"] = g.window_used;
    s["span_dimension"] = g.span_dimension;
    return s;
}

void summary(std::ostream& err, const Analysis& a) {
    err << "reachable set = e^L, dim L = " << a.basis.d << ", verdict = " << verdict_name(a.verdict.kind) << '\n';
}

void emit(std::ostream& out, const io::Json& report) { out << io::dump(report) << '\n'; }

ChartOptions chart_options(const RunConfig& c) {
    ChartOptions o;
    o.eps_V = c.tolerances.eps_V;
    o.jac_tol = c.tolerances.jac_tol;
    o.seed = c.seed;
    o.recurrence_budget = c.budgets.recurrence;
    o.conjugator_tries = static_cast<std::size_t>(c.budgets.conjugator_tries);
    o.newton_iters = static_cast<int>(c.budgets.newton_iters);
    return o;
}

int cmd_analyze(const std::string& config_path, std::ostream& out, std::ostream& err) {
    const auto c = load_run_config(config_path, env_seed());
    const auto a = analyze(c);
    auto report = report_header(c, "analyze");
    report["sampling"] = sampling_json(c, a.gens);
    const auto closure = closure_report(a.basis, a.verdict);
    for (const auto& [k, v] : closure.items()) report[k] = v;
    report["description"] = a.verdict.reachable_set_description;
    emit(out, report);
    summary(err, a);
    return kOk;
}

int cmd_synthesize(const std::string& config_path, const std::string& target_path,
                   std::optional<double> eps, const std::string& out_path, std::ostream& out,
                   std::ostream& err) {
    auto c = load_run_config(config_path, env_seed());
    if (eps) {
        if (!(*eps > 0.0)) throw ParseError("--eps must be > 0");
        c.tolerances.eps = *eps;
    }
    const ComplexMatrix target_m = io::read_matrix_file(target_path);
    if (target_m.rows() != c.n) throw ParseError(target_path + ": target dimension differs from n");
    UnitaryMatrix target = UnitaryMatrix::identity(1);
    try {
        target = UnitaryMatrix(target_m);
    } catch (const InvalidArgument& e) {
        throw ParseError(target_path + ": " + e.what());
    }

    const auto a = analyze(c);
    summary(err, a);
    auto report = report_header(c, "synthesize");
    report["target_hash"] = fnv1a_hex(io::dump(io::matrix_to_json(target_m), -1));
    report["d"] = a.basis.d;
    report["verdict"] = verdict_name(a.verdict.kind);

    const auto fail = [&](const char* status, int code, const std::string& message) {
        report["status"] = status;
        report["message"] = message;
        emit(out, report);
        err << "larc: " << message << '\n';
        return code;
    };

    if (a.basis.d == 0) {
        if (frobenius_distance(target.matrix(), ComplexMatrix::Identity(c.n, c.n)) < c.tolerances.eps) {
            report["status"] = "ok";
            report["synthesis"] = synthesis_report(SynthesisResult{});
            if (!out_path.empty()) io::write_text_file(out_path, io::dump(program_to_json({})) + "\n");
            emit(out, report);
            return kOk;
        }
        report["membership_residual"] = std::numeric_limits<double>::infinity();
        return fail("membership_rejected", kMembershipRejected, "target not reachable: algebra is trivial");
    }

    try {
        const auto chart = build_chart(a.gens, a.basis, chart_options(c));
        io::Json cj = io::Json::object();
        cj["s"] = chart.s;
        cj["conjugators"] = chart.conjugators.size();
        cj["jacobian_abs_det"] = chart.jacobian_abs_det;
        cj["basis_gram_min"] = chart.basis_gram_min;
        cj["local_radius"] = chart.local_radius;
        report["chart"] = cj;

        SynthesisOptions so;
        so.eps = c.tolerances.eps;
        so.membership_tol = c.tolerances.membership_tol;
        so.reach.power_budget = c.budgets.powers;
        const auto r = synthesize(c.model, chart, target, so);

        // Independent re-verification of the emitted program.
        const auto x = propagate_program(c.model, r.program);
        const double verified = frobenius_distance(x.matrix(), target.matrix());
        report["membership_residual"] = r.membership_residual;
        report["halvings"] = r.halvings;
        report["synthesis"] = synthesis_report(r);
        report["verified_error"] = verified;
        if (!out_path.empty()) io::write_text_file(out_path, io::dump(program_to_json(r.program)) + "\n");
        if (!(verified < c.tolerances.eps)) {
            return fail("error_above_eps", kBudgetExhausted,
                        "verified error " + std::to_string(verified) + " is not below eps");
        }
        report["status"] = "ok";
        emit(out, report);
        return kOk;
    } catch (const MembershipRejected& e) {
        report["membership_residual"] = e.residual();
        return fail("membership_rejected", kMembershipRejected, e.what());
    } catch (const BudgetExceeded& e) {
        report["best_value"] = e.best_value();
        report["best_error"] = e.best_error();
        return fail("budget_exhausted", kBudgetExhausted, e.what());
    } catch (const NoConvergence& e) {
        return fail("budget_exhausted", kBudgetExhausted, e.what());
    } catch (const BoundaryHit& e) {
        return fail("budget_exhausted", kBudgetExhausted, e.what());
    } catch (const ChartFailure& e) {
        return fail("chart_failure", kInternal, e.what());
    }
}

int cmd_verify(const std::string& config_path, const std::string& program_path,
               const std::string& target_path, std::ostream& out, std::ostream& err) {
    const auto c = load_run_config(config_path, env_seed());
    const auto program = program_from_json(io::read_json_file(program_path));
    const ComplexMatrix target = io::read_matrix_file(target_path);
    if (target.rows() != c.n) throw ParseError(target_path + ": target dimension differs from n");

    bool admissible = true;
    for (const auto& s : program.segments()) {
        if (s.u.size() != c.m) throw ParseError(program_path + ": control vector length differs from m");
        admissible = admissible && c.controls.contains(s.u);
    }
    const auto x = propagate_program(c.model, program);
    const double error = frobenius_distance(x.matrix(), target);
    auto report = report_header(c, "verify");
    report["segments"] = program.size();
    report["total_duration"] = program.total_duration();
    report["admissible"] = admissible;
    report["error"] = error;
    const bool ok = admissible && error < c.tolerances.eps;
    report["status"] = ok ? "ok" : "mismatch";
    emit(out, report);
    if (!ok) {
        err << "larc: verify: " << (admissible ? "error not below eps" : "controls outside the control set")
            << '\n';
    }
    return ok ? kOk : kInternal;
}

int cmd_oracle(const std::string& path, std::ostream& out, std::ostream& err) {
    const auto input = io::read_json_file(path);
    io::Json result;
    try {
        result = oracle::run_oracle_json(input);
    } catch (const MixedSupport& e) {
        throw ParseError(path + ": " + e.what());
    }
    io::Json report = io::Json::object();
    report["version"] = kVersion;
    report["command"] = "oracle";
    report["input_hash"] = fnv1a_hex(io::dump(input, -1));
    report["dimension"] = result["dimension"];
    report["strings"] = result["strings"];
    emit(out, report);
    err << "pauli closure dimension = " << result["dimension"].get<std::size_t>() << '\n';
    return kOk;
}

int cmd_density(const std::string& config_path, std::size_t samples, double horizon, std::size_t probes,
                std::size_t max_segments, std::ostream& out, std::ostream& err) {
    const auto c = load_run_config(config_path, env_seed());
    if (samples < 1) throw ParseError("--samples must be >= 1");
    if (!(horizon >= 0.0) || !std::isfinite(horizon)) throw ParseError("--horizon must be >= 0");
    if (probes < 1 || max_segments < 1) throw ParseError("--probes and --max-segments must be >= 1");
    const auto a = analyze(c);
    summary(err, a);
    auto report = report_header(c, "density");
    report["d"] = a.basis.d;
    report["verdict"] = verdict_name(a.verdict.kind);
    report["horizon"] = horizon;
    report["max_segments"] = max_segments;
    if (a.basis.d == 0) {
        report["covering"] = covering_to_json(CoveringStats{0.0, 0.0, 0.0, samples, 0});
    } else {
        const auto stats =
            density_sampler(c.model, c.controls, a.basis, samples, horizon, c.seed, {max_segments, probes});
        report["covering"] = covering_to_json(stats);
    }
    emit(out, report);
    return kOk;
}

}  // namespace

std::string fnv1a_hex(const std::string& text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

RunConfig parse_run_config(const io::Json& j, std::optional<std::uint64_t> seed_override) {
    if (!j.is_object()) throw ParseError("config: expected a JSON object");
    if (!j.contains("n") || !j["n"].is_number_integer()) throw ParseError("n: missing integer field");
    if (!j.contains("m") || !j["m"].is_number_integer()) throw ParseError("m: missing integer field");
    const auto n = j["n"].get<std::int64_t>();
    const auto m = j["m"].get<std::int64_t>();
    if (n < 1 || n > kMaxDimension) throw ParseError("n: must be in [1, " + std::to_string(kMaxDimension) + "]");
    if (m < 0) throw ParseError("m: must be >= 0");
    if (!j.contains("model")) throw ParseError("model: missing field");
    if (!j.contains("control_set")) throw ParseError("control_set: missing field");

    std::uint64_t seed = 0;
    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned()) throw ParseError("seed: expected a nonnegative integer");
        seed = j["seed"].get<std::uint64_t>();
    }
    if (seed_override) seed = *seed_override;

    auto model = model_from_json(j["model"], static_cast<Index>(n), static_cast<std::size_t>(m));
    auto controls = control_set_from_json(j["control_set"], static_cast<std::size_t>(m), seed);

    SamplingConfig sampling;
    const auto& sj = object_field(j, "sampling");
    sampling.strategy = controls.is_box() ? "random" : "exhaustive";
    if (sj.contains("strategy")) {
        if (!sj["strategy"].is_string()) throw ParseError("sampling.strategy: expected a string");
        sampling.strategy = sj["strategy"].get<std::string>();
        if (sampling.strategy != "random" && sampling.strategy != "grid" && sampling.strategy != "exhaustive") {
            throw ParseError("sampling.strategy: expected \"random\", \"grid\" or \"exhaustive\"");
        }
    }
    if (sampling.strategy == "exhaustive" && controls.is_box()) {
        throw ParseError("sampling.strategy: \"exhaustive\" needs a finite control set");
    }
    sampling.count = static_cast<std::size_t>(positive_int(sj, "count", 1000, "sampling"));
    sampling.points_per_axis = static_cast<int>(positive_int(sj, "points_per_axis", 5, "sampling"));
    if (sj.contains("window")) {
        sampling.window = static_cast<std::size_t>(positive_int(sj, "window", 1, "sampling"));
    }

    Tolerances tol;
    const auto& tj = object_field(j, "tolerances");
    tol.rank_tol = positive_double(tj, "rank_tol", tol.rank_tol, "tolerances");
    tol.closure_tol = positive_double(tj, "closure_tol", tol.closure_tol, "tolerances");
    tol.eps_V = positive_double(tj, "eps_V", tol.eps_V, "tolerances");
    tol.jac_tol = positive_double(tj, "jac_tol", tol.jac_tol, "tolerances");
    tol.eps = positive_double(tj, "eps", tol.eps, "tolerances");
    tol.membership_tol = positive_double(tj, "membership_tol", tol.membership_tol, "tolerances");

    Budgets b;
    const auto& bj = object_field(j, "budgets");
    b.recurrence = positive_int(bj, "recurrence", b.recurrence, "budgets");
    b.powers = positive_int(bj, "powers", b.powers, "budgets");
    b.newton_iters = positive_int(bj, "newton_iters", b.newton_iters, "budgets");
    b.conjugator_tries = positive_int(bj, "conjugator_tries", b.conjugator_tries, "budgets");
    if (b.newton_iters > std::numeric_limits<int>::max()) throw ParseError("budgets.newton_iters: too large");

    return RunConfig{static_cast<Index>(n), static_cast<std::size_t>(m), std::move(model), std::move(controls),
                     std::move(sampling), tol, b, seed, fnv1a_hex(io::dump(j, -1))};
}

RunConfig load_run_config(const std::string& path, std::optional<std::uint64_t> seed_override) {
    const auto j = io::read_json_file(path);
    try {
        return parse_run_config(j, seed_override);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

io::Json report_header(const RunConfig& c, const std::string& command) {
    io::Json h = io::Json::object();
    h["version"] = kVersion;
    h["command"] = command;
    h["config_hash"] = c.hash;
    h["seed"] = c.seed;
    h["n"] = c.n;
    h["m"] = c.m;
    io::Json t = io::Json::object();
    t["rank_tol"] = c.tolerances.rank_tol;
    t["closure_tol"] = c.tolerances.closure_tol;
    t["eps_V"] = c.tolerances.eps_V;
    t["jac_tol"] = c.tolerances.jac_tol;
    t["eps"] = c.tolerances.eps;
    t["membership_tol"] = c.tolerances.membership_tol;
    h["tolerances"] = t;
    io::Json b = io::Json::object();
    b["recurrence"] = c.budgets.recurrence;
    b["powers"] = c.budgets.powers;
    b["newton_iters"] = c.budgets.newton_iters;
    b["conjugator_tries"] = c.budgets.conjugator_tries;
    h["budgets"] = b;
    return h;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Lie algebra rank condition analysis and positive-time synthesis"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::string config, target, program, out_path, pauli;
    std::optional<double> eps;
    std::size_t samples = 1000, probes = 100, max_segments = 16;
    double horizon = 1.0;

    auto* analyze_cmd = app.add_subcommand("analyze", "Lie closure and controllability verdict");
    analyze_cmd->add_option("config", config, "Run config (JSON)")->required();

    auto* synth_cmd = app.add_subcommand("synthesize", "Nonnegative-duration program for a target");
    synth_cmd->add_option("config", config, "Run config (JSON)")->required();
    synth_cmd->add_option("--target", target, "Target matrix (JSON)")->required();
    synth_cmd->add_option("--eps", eps, "Target accuracy (Frobenius)");
    synth_cmd->add_option("--out", out_path, "Write the program here");

    auto* verify_cmd = app.add_subcommand("verify", "Propagate a program and compare with a target");
    verify_cmd->add_option("config", config, "Run config (JSON)")->required();
    verify_cmd->add_option("program", program, "Program (JSON)")->required();
    verify_cmd->add_option("--target", target, "Target matrix (JSON)")->required();

    auto* oracle_cmd = app.add_subcommand("oracle", "Exact Pauli-string closure dimension");
    oracle_cmd->add_option("pauli", pauli, "Oracle input (JSON)")->required();

    auto* density_cmd = app.add_subcommand("density", "Covering radius of random reachable points");
    density_cmd->add_option("config", config, "Run config (JSON)")->required();
    density_cmd->add_option("--samples", samples, "Number of random programs")->required();
    density_cmd->add_option("--horizon", horizon, "Maximum segment duration")->required();
    density_cmd->add_option("--probes", probes, "Number of probe targets");
    density_cmd->add_option("--max-segments", max_segments, "Maximum segments per program");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << '\n';
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "larc: " << e.what() << '\n';
        return kConfigError;
    }

    try {
        if (analyze_cmd->parsed()) return cmd_analyze(config, out, err);
        if (synth_cmd->parsed()) return cmd_synthesize(config, target, eps, out_path, out, err);
        if (verify_cmd->parsed()) return cmd_verify(config, program, target, out, err);
        if (oracle_cmd->parsed()) return cmd_oracle(pauli, out, err);
        if (density_cmd->parsed()) return cmd_density(config, samples, horizon, probes, max_segments, out, err);
    } catch (const ParseError& e) {
        err << "larc: config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const MembershipRejected& e) {
        err << "larc: " << e.what() << '\n';
        return kMembershipRejected;
    } catch (const BudgetExceeded& e) {
        err << "larc: " << e.what() << '\n';
        return kBudgetExhausted;
    } catch (const std::exception& e) {
        err << "larc: internal error: " << e.what() << '\n';
        return kInternal;
    }
    return kInternal;
}

}  // namespace larc::cli
