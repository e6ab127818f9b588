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

#include "larc/program.hpp"

#include "larc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace larc {

namespace {

void require_duration(double tau) {
    if (!std::isfinite(tau) || tau < 0.0) {
        throw InvalidArgument("ControlProgram: duration must be finite and >= 0, got " +
                              format_number(tau));
    }
}

}  // namespace

ControlProgram::ControlProgram(std::vector<Segment> segments) : segments_(std::move(segments)) {
    for (const auto& s : segments_) require_duration(s.tau);
}

void ControlProgram::add(ControlVector u, double tau) {
    require_duration(tau);
    segments_.push_back({std::move(u), tau});
}

ControlProgram ControlProgram::then(const ControlProgram& later) const {
    ControlProgram out = *this;
    out.segments_.insert(out.segments_.end(), later.segments_.begin(), later.segments_.end());
    return out;
}

double ControlProgram::total_duration() const noexcept {
    return std::accumulate(segments_.begin(), segments_.end(), 0.0,
                           [](double acc, const Segment& s) { return acc + s.tau; });
}

UnitaryMatrix propagate_program(const HamiltonianModel& model, const ControlProgram& program) {
    UnitaryAccumulator x(model.dim());
    for (const auto& s : program.segments()) {
        if (s.tau == 0.0) {
            // Still validates the control arity.
            evaluate_model(model, s.u);
            continue;
        }
        x.left_multiply(matexp(generator_at(model, s.u), s.tau).matrix());
    }
    return x.value();
}

io::Json program_to_json(const ControlProgram& program) {
    io::Json segs = io::Json::array();
    for (const auto& s : program.segments()) {
        io::Json seg = io::Json::object();
        seg["u"] = s.u;
        seg["tau"] = s.tau;
        segs.push_back(std::move(seg));
    }
    io::Json out = io::Json::object();
    out["segments"] = std::move(segs);
    return out;
}

ControlProgram program_from_json(const io::Json& j) {
    if (!j.is_object() || !j.contains("segments") || !j["segments"].is_array()) {
        throw ParseError("program: missing array field \"segments\"");
    }
    std::vector<Segment> segs;
    for (std::size_t i = 0; i < j["segments"].size(); ++i) {
        const auto& s = j["segments"][i];
        const std::string where = "program.segments[" + std::to_string(i) + "]";
        if (!s.is_object() || !s.contains("u") || !s["u"].is_array() || !s.contains("tau") ||
            !s["tau"].is_number()) {
            throw ParseError(where + ": needs \"u\" (array) and \"tau\" (number)");
        }
        ControlVector u;
        for (const auto& x : s["u"]) {
            if (!x.is_number()) throw ParseError(where + ": controls must be numbers");
            u.push_back(x.get<double>());
        }
        const double tau = s["tau"].get<double>();
        if (!std::isfinite(tau) || tau < 0.0) throw ParseError(where + ": tau must be >= 0");
        segs.push_back({std::move(u), tau});
    }
    return ControlProgram(std::move(segs));
}

ReachableWord::ReachableWord(Index n) : value_(ComplexMatrix::Identity(n, n)) {}

ReachableWord::ReachableWord(const GeneratorSet& gens, std::vector<WordFactor> factors)
    : value_(ComplexMatrix::Identity(gens.n, gens.n)) {
    for (const auto& f : factors) append(gens, f.generator, f.t);
}

void ReachableWord::append(const GeneratorSet& gens, std::size_t generator, double t) {
    if (generator >= gens.size()) {
        throw InvalidArgument("ReachableWord: generator index " + std::to_string(generator) +
                              " out of range");
    }
    if (!std::isfinite(t) || t < 0.0) {
        throw InvalidArgument("ReachableWord: factor time must be >= 0, got " + format_number(t));
    }
    factors_.push_back({generator, t});
    multiply_right(matexp(gens.generators[generator], t).matrix(), 1);
}

void ReachableWord::append(const ReachableWord& other) {
    if (other.dim() != dim()) throw DimensionMismatch("ReachableWord: dimension mismatch");
    factors_.insert(factors_.end(), other.factors_.begin(), other.factors_.end());
    multiply_right(other.value_, other.factors_.size());
}

void ReachableWord::multiply_right(const ComplexMatrix& m, std::size_t factor_count) {
    value_ = value_ * m;
    since_projection_ += std::max<std::size_t>(factor_count, 1);
    if (since_projection_ >= static_cast<std::size_t>(UnitaryAccumulator::kReprojectEvery)) {
        value_ = polar_project(value_).matrix();
        since_projection_ = 0;
    }
}

ReachableWord ReachableWord::repeated(std::size_t times) const {
    ReachableWord out(dim());
    out.factors_.reserve(factors_.size() * times);
    for (std::size_t k = 0; k < times; ++k) out.append(*this);
    return out;
}

ControlProgram word_to_program(const ReachableWord& word, const GeneratorSet& gens) {
    ControlProgram program;
    const auto& fs = word.factors();
    for (auto it = fs.rbegin(); it != fs.rend(); ++it) {
        if (it->generator >= gens.size()) {
            throw InvalidArgument("word_to_program: generator index out of range");
        }
        program.add(gens.control_points[it->generator], it->t / gens.scales[it->generator]);
    }
    return program;
}

BudgetCounters& BudgetCounters::operator+=(const BudgetCounters& o) {
    recurrence_candidates += o.recurrence_candidates;
    power_steps += o.power_steps;
    newton_iterations += o.newton_iterations;
    conjugator_tries += o.conjugator_tries;
    radius_probes += o.radius_probes;
    return *this;
}

io::Json budget_to_json(const BudgetCounters& b) {
    io::Json out = io::Json::object();
    out["recurrence_candidates"] = b.recurrence_candidates;
    out["power_steps"] = b.power_steps;
    out["newton_iterations"] = b.newton_iterations;
    out["conjugator_tries"] = b.conjugator_tries;
    out["radius_probes"] = b.radius_probes;
    return out;
}

}  // namespace larc
