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

// Control-dependent Hamiltonians H(u_1, ..., u_m), control sets, and the
// extraction of the generating set span{-i H(u) : u in U}.
//
// Sign convention: the dynamical generator of a constant control u is
// A(u) = -i H(u). Its real span equals that of {i H(u)}, so both conventions
// generate the same Lie algebra.

#pragma once

#include "larc/matrix.hpp"
#include "larc/matrix_io.hpp"

#include <cstdint>
#include <variant>
#include <vector>

namespace larc {

using ControlVector = std::vector<double>;

struct PolynomialTerm {
    std::vector<int> exponents;  // one non-negative exponent per control
    HermitianMatrix coefficient;
};

struct TabulatedPoint {
    ControlVector u;
    HermitianMatrix h;
};

class HamiltonianModel {
public:
    // H(u) = sum_alpha coefficient_alpha * prod_k u_k^alpha_k.
    static HamiltonianModel polynomial(Index n, std::size_t m, std::vector<PolynomialTerm> terms);
    // H is only known at the listed control points; no interpolation.
    static HamiltonianModel tabulated(Index n, std::size_t m, std::vector<TabulatedPoint> points);

    Index dim() const noexcept { return n_; }
    std::size_t num_controls() const noexcept { return m_; }
    bool is_polynomial() const noexcept { return polynomial_; }
    const std::vector<PolynomialTerm>& terms() const noexcept { return terms_; }
    const std::vector<TabulatedPoint>& table() const noexcept { return table_; }

private:
    HamiltonianModel() = default;

    Index n_ = 0;
    std::size_t m_ = 0;
    bool polynomial_ = true;
    std::vector<PolynomialTerm> terms_;
    std::vector<TabulatedPoint> table_;
};

HermitianMatrix evaluate_model(const HamiltonianModel& model, const ControlVector& u);

// -i H(u).
SkewHermitianMatrix generator_at(const HamiltonianModel& model, const ControlVector& u);

struct BoxControls {
    ControlVector lower;
    ControlVector upper;
};

struct FiniteControls {
    std::vector<ControlVector> points;
};

class ControlSet {
public:
    static ControlSet box(ControlVector lower, ControlVector upper, std::uint64_t seed = 0);
    static ControlSet finite(std::vector<ControlVector> points, std::uint64_t seed = 0);

    bool is_box() const noexcept { return std::holds_alternative<BoxControls>(kind_); }
    const BoxControls& as_box() const { return std::get<BoxControls>(kind_); }
    const FiniteControls& as_finite() const { return std::get<FiniteControls>(kind_); }
    std::size_t num_controls() const;
    std::uint64_t seed() const noexcept { return seed_; }
    ControlSet with_seed(std::uint64_t seed) const;

    bool contains(const ControlVector& u, double tol = 1e-12) const;

private:
    ControlSet(std::variant<BoxControls, FiniteControls> kind, std::uint64_t seed)
        : kind_(std::move(kind)), seed_(seed) {}

    std::variant<BoxControls, FiniteControls> kind_;
    std::uint64_t seed_;
};

struct GridStrategy {
    int points_per_axis = 5;
};
struct RandomStrategy {
    std::size_t count = 1000;
};
struct ExhaustiveStrategy {};

using SamplingStrategy = std::variant<GridStrategy, RandomStrategy, ExhaustiveStrategy>;

struct SamplingOptions {
    double rank_tol = 1e-9;
    // Consecutive non-enlarging random samples before stopping; 0 means 2 n^2.
    std::size_t stabilization_window = 0;
};

struct GeneratorSet {
    Index n = 0;
    std::vector<SkewHermitianMatrix> generators;
    std::vector<ControlVector> control_points;
    // generators[k] * scales[k] == -i H(control_points[k]).
    std::vector<double> scales;
    std::size_t span_dimension = 0;
    // Set when every sampled evaluation vanished.
    bool all_zero = false;
    std::size_t samples_evaluated = 0;
    std::size_t window_used = 0;

    std::size_t size() const noexcept { return generators.size(); }
};

// Greedy span extraction: a sample is kept when its residual after projection
// onto the current span exceeds rank_tol * ||A(u)||_F.
GeneratorSet sample_generators(const HamiltonianModel& model, const ControlSet& controls,
                               const SamplingStrategy& strategy,
                               const SamplingOptions& options = {});

// Maximal linearly independent sublist in first-seen order, each element
// rescaled to unit Frobenius norm (the scale is folded into `scales`).
GeneratorSet select_independent(const GeneratorSet& gens, double rank_tol = 1e-9);

// Config fragments; see README for the schema.
HamiltonianModel model_from_json(const io::Json& j, Index n, std::size_t m);
ControlSet control_set_from_json(const io::Json& j, std::size_t num_controls, std::uint64_t seed);
io::Json model_to_json(const HamiltonianModel& model);

}  // namespace larc
