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

// Local chart around a reachable point and its Newton inverse.
//
// Given independent generators A_1..A_s of a d-dimensional algebra L, the
// chart is
//
//   Phi(j_1, ..., j_d) = exp(A'_1 j_1) V_1 exp(A'_2 j_2) V_2 ... exp(A'_d j_d) V_d
//
// with A'_k = A_k for k <= s and A'_{s+j} = Abar_j, one of the A's chosen
// together with a reachable conjugator U_j such that
// {A_1..A_s, U_1 Abar_1 U_1^{-1}, ..., U_{d-s} Abar_{d-s} U_{d-s}^{-1}} is a
// basis of L. The interleaving words V_k are reachable approximations of
//
//   V_k     ~ exp(-A_k)                           k < s
//   V_s     ~ exp(-A_s) U_1
//   V_{s+j} ~ exp(-Abar_j) U_j^{-1} U_{j+1}
//   V_d     ~ exp(-Abar_{d-s}) U_{d-s}^{-1}
//
// so that the right-translated derivative of Phi at (1, ..., 1) is close to
// that basis and Phi covers a neighbourhood of U0 = Phi(1, ..., 1) with
// nonnegative arguments.

#pragma once

#include "larc/closure.hpp"
#include "larc/matrix.hpp"
#include "larc/model.hpp"
#include "larc/program.hpp"
#include "larc/recurrence.hpp"

#include <cstdint>
#include <numbers>
#include <vector>

namespace larc {

struct ChartOptions {
    double eps_V = 1e-6;
    double jac_tol = 1e-6;
    std::uint64_t seed = 0;

    // Conjugator search.
    std::size_t conjugator_tries = 4000;
    std::size_t candidates_per_direction = 16;
    std::size_t max_conjugator_factors = 8;
    double max_conjugator_time = 2.0 * std::numbers::pi;
    double min_conjugate_residual = 0.1;  // relative, for accepting a new direction
    double min_basis_gram = 1e-6;

    std::int64_t recurrence_budget = 10'000'000;
    RecurrenceOptions recurrence;

    // Local radius probing.
    bool measure_radius = true;
    std::size_t radius_probes = 50;
    double probe_tol = 1e-10;
    int newton_iters = 60;
};

struct ChartConstruction {
    GeneratorSet gens;  // independent, unit-norm
    LieBasis basis;
    std::size_t s = 0;
    std::size_t d = 0;

    std::vector<ReachableWord> conjugators;  // U_1 .. U_{d-s}
    std::vector<std::size_t> abar_indices;   // Abar_j = gens[abar_indices[j]]
    std::vector<std::size_t> exponent_generators;  // A'_1 .. A'_d as gens indices
    std::vector<ReachableWord> V;                  // V_1 .. V_d

    UnitaryMatrix U0 = UnitaryMatrix::identity(1);
    ReachableWord center_word{1};  // word whose value is U0
    RealMatrix jacobian;
    double jacobian_abs_det = 0.0;
    double basis_gram_min = 0.0;
    double local_radius = 0.0;
    int newton_iters = 60;

    BudgetCounters spent;

    // Cached eigen-decompositions of A'_k for fast evaluation.
    std::vector<SkewEigenDecomposition> exponent_eigen;
};

// The generators are passed through select_independent first.
ChartConstruction build_chart(const GeneratorSet& gens, const LieBasis& basis,
                              const ChartOptions& options = {});

// Phi(j).
UnitaryMatrix chart_value(const ChartConstruction& chart, const RealVector& j);

// Columns: coordinates of P_k A'_k P_k^{-1}, P_k the product of all factors to
// the left of the k-th exponential in Phi(j).
RealMatrix chart_jacobian(const ChartConstruction& chart, const RealVector& j);

// Reachable word with value Phi(j); requires j >= 0.
ReachableWord chart_word(const ChartConstruction& chart, const RealVector& j);

// The ideal chart columns {A_1..A_s, U_j Abar_j U_j^{-1}} in basis coordinates.
RealMatrix ideal_chart_columns(const ChartConstruction& chart);

struct LocalSolveResult {
    RealVector j;
    double error = 0.0;  // ||Phi(j) - target||_F
    int iterations = 0;
};

// Damped Newton on f(j) = coords(log(target Phi(j)^{-1})) with iterates kept
// in [0, 2]^d. Throws NoConvergence on stagnation and BoundaryHit when a
// j_k = 0 constraint is binding at an unconverged point. A returned result
// always satisfies error < tol.
LocalSolveResult local_solve(const ChartConstruction& chart, const UnitaryMatrix& target, double tol,
                             int max_iters = 0);

// Measures local_radius: the largest probed rho at which every one of
// `probes` random targets exp(X) U0, ||exp(X) - I||_F = rho, X in L, is solved.
double estimate_local_radius(const ChartConstruction& chart, std::size_t probes, double tol,
                             std::uint64_t seed, BudgetCounters* counters = nullptr);

}  // namespace larc
