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

#include "larc/model.hpp"

#include "larc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <string>

namespace larc {

namespace {

void require_arity(const ControlVector& u, std::size_t m, const char* what) {
    if (u.size() != m) {
        throw InvalidArgument(std::string(what) + ": expected " + std::to_string(m) +
                              " controls, got " + std::to_string(u.size()));
    }
}

double monomial(const std::vector<int>& exponents, const ControlVector& u) {
    double v = 1.0;
    for (std::size_t k = 0; k < exponents.size(); ++k) {
        if (exponents[k] != 0) v *= std::pow(u[k], exponents[k]);
    }
    return v;
}

// Enumerates the grid points of a box in row-major order.
std::vector<ControlVector> box_grid(const BoxControls& box, int per_axis) {
    if (per_axis < 1) throw InvalidArgument("grid: points_per_axis must be >= 1");
    const std::size_t m = box.lower.size();
    std::vector<ControlVector> out;
    std::vector<int> idx(m, 0);
    while (true) {
        ControlVector u(m);
        for (std::size_t k = 0; k < m; ++k) {
            u[k] = per_axis == 1
                       ? 0.5 * (box.lower[k] + box.upper[k])
                       : box.lower[k] + (box.upper[k] - box.lower[k]) * idx[k] / (per_axis - 1);
        }
        out.push_back(std::move(u));
        std::size_t k = 0;
        while (k < m && ++idx[k] == per_axis) idx[k++] = 0;
        if (k == m) break;
    }
    return out;
}

}  // namespace

HamiltonianModel HamiltonianModel::polynomial(Index n, std::size_t m,
                                              std::vector<PolynomialTerm> terms) {
    std::set<std::vector<int>> seen;
    for (const auto& t : terms) {
        if (t.exponents.size() != m) {
            throw InvalidArgument("polynomial model: exponent vector length != number of controls");
        }
        if (std::any_of(t.exponents.begin(), t.exponents.end(), [](int e) { return e < 0; })) {
            throw InvalidArgument("polynomial model: negative exponent");
        }
        if (t.coefficient.dim() != n) throw DimensionMismatch("polynomial model: coefficient dimension");
        if (!seen.insert(t.exponents).second) {
            throw InvalidArgument("polynomial model: repeated multi-index");
        }
    }
    HamiltonianModel model;
    model.n_ = n;
    model.m_ = m;
    model.polynomial_ = true;
    model.terms_ = std::move(terms);
    return model;
}

HamiltonianModel HamiltonianModel::tabulated(Index n, std::size_t m,
                                             std::vector<TabulatedPoint> points) {
    std::set<ControlVector> seen;
    for (const auto& p : points) {
        require_arity(p.u, m, "tabulated model");
        if (p.h.dim() != n) throw DimensionMismatch("tabulated model: matrix dimension");
        if (!seen.insert(p.u).second) throw InvalidArgument("tabulated model: repeated control point");
    }
    HamiltonianModel model;
    model.n_ = n;
    model.m_ = m;
    model.polynomial_ = false;
    model.table_ = std::move(points);
    return model;
}

HermitianMatrix evaluate_model(const HamiltonianModel& model, const ControlVector& u) {
    require_arity(u, model.num_controls(), "evaluate_model");
    const Index n = model.dim();
    if (model.is_polynomial()) {
        ComplexMatrix h = ComplexMatrix::Zero(n, n);
        for (const auto& t : model.terms()) {
            h += monomial(t.exponents, u) * t.coefficient.matrix();
        }
        // Real combination of Hermitian matrices; symmetrize away rounding.
        return HermitianMatrix(0.5 * (h + h.adjoint()));
    }
    for (const auto& p : model.table()) {
        if (p.u == u) return p.h;
    }
    throw InvalidArgument("evaluate_model: control point not in table");
}

SkewHermitianMatrix generator_at(const HamiltonianModel& model, const ControlVector& u) {
    return SkewHermitianMatrix::from_hamiltonian(evaluate_model(model, u));
}

ControlSet ControlSet::box(ControlVector lower, ControlVector upper, std::uint64_t seed) {
    if (lower.size() != upper.size()) throw InvalidArgument("box: bound lengths differ");
    for (std::size_t k = 0; k < lower.size(); ++k) {
        if (!std::isfinite(lower[k]) || !std::isfinite(upper[k])) {
            throw InvalidArgument("box: bounds must be finite");
        }
        if (lower[k] > upper[k]) throw InvalidArgument("box: lower > upper");
    }
    return ControlSet(BoxControls{std::move(lower), std::move(upper)}, seed);
}

ControlSet ControlSet::finite(std::vector<ControlVector> points, std::uint64_t seed) {
    if (points.empty()) throw InvalidArgument("finite control set: empty");
    for (const auto& p : points) {
        if (p.size() != points.front().size()) throw InvalidArgument("finite control set: ragged points");
    }
    return ControlSet(FiniteControls{std::move(points)}, seed);
}

std::size_t ControlSet::num_controls() const {
    return is_box() ? as_box().lower.size() : as_finite().points.front().size();
}

ControlSet ControlSet::with_seed(std::uint64_t seed) const {
    return ControlSet(kind_, seed);
}

bool ControlSet::contains(const ControlVector& u, double tol) const {
    if (u.size() != num_controls()) return false;
    if (is_box()) {
        const auto& b = as_box();
        for (std::size_t k = 0; k < u.size(); ++k) {
            if (u[k] < b.lower[k] - tol || u[k] > b.upper[k] + tol) return false;
        }
        return true;
    }
    const auto& pts = as_finite().points;
    return std::find(pts.begin(), pts.end(), u) != pts.end();
}

GeneratorSet sample_generators(const HamiltonianModel& model, const ControlSet& controls,
                               const SamplingStrategy& strategy, const SamplingOptions& options) {
    if (controls.num_controls() != model.num_controls()) {
        throw InvalidArgument("sample_generators: control set arity does not match model");
    }
    const Index n = model.dim();
    const auto full = static_cast<std::size_t>(n * n);

    GeneratorSet out;
    out.n = n;
    out.window_used = options.stabilization_window == 0 ? 2 * full : options.stabilization_window;

    OrthonormalSpan span(n);
    bool any_nonzero = false;
    const auto consider = [&](const ControlVector& u) {
        ++out.samples_evaluated;
        auto a = generator_at(model, u);
        const double norm = a.matrix().norm();
        if (norm == 0.0) return false;
        any_nonzero = true;
        if (!span.add_if_independent(a.matrix(), options.rank_tol)) return false;
        out.generators.push_back(std::move(a));
        out.control_points.push_back(u);
        out.scales.push_back(1.0);
        return true;
    };

    if (std::holds_alternative<RandomStrategy>(strategy)) {
        const std::size_t count = std::get<RandomStrategy>(strategy).count;
        std::mt19937_64 rng(controls.seed());
        std::size_t quiet = 0;
        for (std::size_t i = 0; i < count && quiet < out.window_used && span.size() < full; ++i) {
            ControlVector u;
            if (controls.is_box()) {
                const auto& b = controls.as_box();
                u.resize(b.lower.size());
                for (std::size_t k = 0; k < u.size(); ++k) {
                    std::uniform_real_distribution<double> dist(b.lower[k], b.upper[k]);
                    u[k] = dist(rng);
                }
            } else {
                const auto& pts = controls.as_finite().points;
                std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
                u = pts[pick(rng)];
            }
            quiet = consider(u) ? 0 : quiet + 1;
        }
    } else {
        std::vector<ControlVector> points;
        if (controls.is_box()) {
            if (std::holds_alternative<ExhaustiveStrategy>(strategy)) {
                throw InvalidArgument("sample_generators: exhaustive sampling needs a finite control set");
            }
            points = box_grid(controls.as_box(), std::get<GridStrategy>(strategy).points_per_axis);
        } else {
            points = controls.as_finite().points;
        }
        for (const auto& u : points) {
            if (span.size() >= full) break;
            consider(u);
        }
    }

    out.span_dimension = out.generators.size();
    out.all_zero = !any_nonzero;
    return out;
}

GeneratorSet select_independent(const GeneratorSet& gens, double rank_tol) {
    GeneratorSet out;
    out.n = gens.n;
    out.samples_evaluated = gens.samples_evaluated;
    out.window_used = gens.window_used;
    out.all_zero = gens.all_zero;
    OrthonormalSpan span(gens.n);
    for (std::size_t k = 0; k < gens.size(); ++k) {
        const auto& a = gens.generators[k];
        if (!span.add_if_independent(a.matrix(), rank_tol)) continue;
        const double norm = a.matrix().norm();
        out.generators.push_back(a.scaled(1.0 / norm));
        out.control_points.push_back(gens.control_points[k]);
        out.scales.push_back(gens.scales[k] * norm);
    }
    out.span_dimension = out.generators.size();
    return out;
}

HamiltonianModel model_from_json(const io::Json& j, Index n, std::size_t m) {
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) {
        throw ParseError("model: missing string field \"type\"");
    }
    const auto type = j["type"].get<std::string>();
    const auto hermitian = [&](const io::Json& mj, const std::string& where) {
        auto mat = io::matrix_from_json(mj);
        if (mat.rows() != n) throw ParseError(where + ": matrix dimension differs from n");
        try {
            return HermitianMatrix(std::move(mat));
        } catch (const InvalidArgument& e) {
            throw ParseError(where + ": " + e.what());
        }
    };
    if (type == "polynomial") {
        if (!j.contains("terms") || !j["terms"].is_array()) throw ParseError("model: missing \"terms\"");
        std::vector<PolynomialTerm> terms;
        for (std::size_t i = 0; i < j["terms"].size(); ++i) {
            const auto& t = j["terms"][i];
            const std::string where = "model.terms[" + std::to_string(i) + "]";
            if (!t.contains("exponents") || !t["exponents"].is_array() || !t.contains("matrix")) {
                throw ParseError(where + ": needs \"exponents\" and \"matrix\"");
            }
            std::vector<int> exps;
            for (const auto& e : t["exponents"]) {
                if (!e.is_number_integer()) throw ParseError(where + ": exponents must be integers");
                exps.push_back(e.get<int>());
            }
            terms.push_back({std::move(exps), hermitian(t["matrix"], where)});
        }
        try {
            return HamiltonianModel::polynomial(n, m, std::move(terms));
        } catch (const InvalidArgument& e) {
            throw ParseError(e.what());
        }
    }
    if (type == "tabulated") {
        if (!j.contains("points") || !j["points"].is_array()) throw ParseError("model: missing \"points\"");
        std::vector<TabulatedPoint> pts;
        for (std::size_t i = 0; i < j["points"].size(); ++i) {
            const auto& p = j["points"][i];
            const std::string where = "model.points[" + std::to_string(i) + "]";
            if (!p.contains("u") || !p["u"].is_array() || !p.contains("matrix")) {
                throw ParseError(where + ": needs \"u\" and \"matrix\"");
            }
            pts.push_back({p["u"].get<ControlVector>(), hermitian(p["matrix"], where)});
        }
        try {
            return HamiltonianModel::tabulated(n, m, std::move(pts));
        } catch (const InvalidArgument& e) {
            throw ParseError(e.what());
        }
    }
    throw ParseError("model: unknown type \"" + type + "\"");
}

ControlSet control_set_from_json(const io::Json& j, std::size_t num_controls, std::uint64_t seed) {
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) {
        throw ParseError("control_set: missing string field \"type\"");
    }
    const auto type = j["type"].get<std::string>();
    try {
        if (type == "box") {
            if (!j.contains("lower") || !j.contains("upper")) {
                throw ParseError("control_set: box needs \"lower\" and \"upper\"");
            }
            auto lower = j["lower"].get<ControlVector>();
            auto upper = j["upper"].get<ControlVector>();
            if (lower.size() != num_controls) throw ParseError("control_set: bound length != m");
            return ControlSet::box(std::move(lower), std::move(upper), seed);
        }
        if (type == "finite") {
            if (!j.contains("points")) throw ParseError("control_set: finite needs \"points\"");
            auto pts = j["points"].get<std::vector<ControlVector>>();
            for (const auto& p : pts) {
                if (p.size() != num_controls) throw ParseError("control_set: point length != m");
            }
            return ControlSet::finite(std::move(pts), seed);
        }
    } catch (const InvalidArgument& e) {
        throw ParseError(std::string("control_set: ") + e.what());
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("control_set: ") + e.what());
    }
    throw ParseError("control_set: unknown type \"" + type + "\"");
}

io::Json model_to_json(const HamiltonianModel& model) {
    io::Json out = io::Json::object();
    if (model.is_polynomial()) {
        out["type"] = "polynomial";
        io::Json terms = io::Json::array();
        for (const auto& t : model.terms()) {
            io::Json term = io::Json::object();
            term["exponents"] = t.exponents;
            term["matrix"] = io::matrix_to_json(t.coefficient.matrix());
            terms.push_back(std::move(term));
        }
        out["terms"] = std::move(terms);
    } else {
        out["type"] = "tabulated";
        io::Json pts = io::Json::array();
        for (const auto& p : model.table()) {
            io::Json pt = io::Json::object();
            pt["u"] = p.u;
            pt["matrix"] = io::matrix_to_json(p.h.matrix());
            pts.push_back(std::move(pt));
        }
        out["points"] = std::move(pts);
    }
    return out;
}

}  // namespace larc
