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

#include "larc/chart.hpp"

#include "larc/errors.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace larc {

namespace {

ComplexMatrix exp_from_eigen(const SkewEigenDecomposition& eig, double t) {
    Eigen::VectorXcd d(eig.phases.size());
    for (Index k = 0; k < d.size(); ++k) d(k) = std::polar(1.0, eig.phases(k) * t);
    return eig.vectors * d.asDiagonal() * eig.vectors.adjoint();
}

ReachableWord random_word(const GeneratorSet& gens, std::mt19937_64& rng, std::size_t max_factors,
                          double max_time) {
    std::uniform_int_distribution<std::size_t> count(1, max_factors);
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    std::uniform_real_distribution<double> time(0.0, max_time);
    const std::size_t k = count(rng);
    std::vector<WordFactor> fs;
    fs.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t g = pick(rng);
        fs.push_back({g, time(rng)});
    }
    return ReachableWord(gens, std::move(fs));
}

ReachableWord negative_unit_flow(const GeneratorSet& gens, std::size_t g, double eps,
                                 const ChartOptions& options, BudgetCounters& spent) {
    const auto r = positive_time_recurrence(gens.generators[g], -1.0, eps, options.recurrence_budget,
                                            options.recurrence);
    spent.recurrence_candidates += r.candidates;
    return ReachableWord(gens, {{g, r.alpha}});
}

// Scale s >= 0 with ||exp(s X) - I||_F = rho, or a negative value when the
// one-parameter subgroup never gets that far from I before turning back.
double scale_for_distance(const RealVector& phases, double rho) {
    const double theta_max = phases.cwiseAbs().maxCoeff();
    if (theta_max == 0.0) return -1.0;
    double lo = 0.0;
    double hi = std::numbers::pi / theta_max;
    if (phase_shift_error(phases, hi) < rho) return -1.0;
    for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        (phase_shift_error(phases, mid) < rho ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

UnitaryMatrix chart_value(const ChartConstruction& chart, const RealVector& j) {
    if (j.size() != static_cast<Index>(chart.d)) throw DimensionMismatch("chart_value: |j| != d");
    UnitaryAccumulator acc(chart.basis.n);
    for (std::size_t k = 0; k < chart.d; ++k) {
        acc.right_multiply(exp_from_eigen(chart.exponent_eigen[k], j(static_cast<Index>(k))));
        acc.right_multiply(chart.V[k].value().matrix());
    }
    return polar_project(acc.value().matrix());
}

RealMatrix chart_jacobian(const ChartConstruction& chart, const RealVector& j) {
    if (j.size() != static_cast<Index>(chart.d)) throw DimensionMismatch("chart_jacobian: |j| != d");
    const auto d = static_cast<Index>(chart.d);
    RealMatrix jac(d, d);
    UnitaryAccumulator left(chart.basis.n);
    for (std::size_t k = 0; k < chart.d; ++k) {
        const ComplexMatrix p = left.value().matrix();
        const auto& a = chart.gens.generators[chart.exponent_generators[k]].matrix();
        const ComplexMatrix column = p * a * p.adjoint();
        jac.col(static_cast<Index>(k)) = project_to_algebra(chart.basis, column).coordinates;
        left.right_multiply(exp_from_eigen(chart.exponent_eigen[k], j(static_cast<Index>(k))));
        left.right_multiply(chart.V[k].value().matrix());
    }
    return jac;
}

ReachableWord chart_word(const ChartConstruction& chart, const RealVector& j) {
    if (j.size() != static_cast<Index>(chart.d)) throw DimensionMismatch("chart_word: |j| != d");
    ReachableWord w(chart.basis.n);
    for (std::size_t k = 0; k < chart.d; ++k) {
        w.append(chart.gens, chart.exponent_generators[k], j(static_cast<Index>(k)));
        w.append(chart.V[k]);
    }
    return w;
}

RealMatrix ideal_chart_columns(const ChartConstruction& chart) {
    const auto d = static_cast<Index>(chart.d);
    RealMatrix cols(d, d);
    for (std::size_t k = 0; k < chart.d; ++k) {
        ComplexMatrix m = chart.gens.generators[chart.exponent_generators[k]].matrix();
        if (k >= chart.s) {
            const ComplexMatrix u = chart.conjugators[k - chart.s].value().matrix();
            m = u * m * u.adjoint();
        }
        cols.col(static_cast<Index>(k)) = project_to_algebra(chart.basis, m).coordinates;
    }
    return cols;
}

LocalSolveResult local_solve(const ChartConstruction& chart, const UnitaryMatrix& target, double tol,
                             int max_iters) {
    if (!(tol > 0.0)) throw InvalidArgument("local_solve: tol must be > 0");
    if (target.dim() != chart.basis.n) throw DimensionMismatch("local_solve: target dimension");
    if (max_iters <= 0) max_iters = chart.newton_iters;
    const auto d = static_cast<Index>(chart.d);

    LocalSolveResult res;
    res.j = RealVector::Ones(d);
    UnitaryMatrix phi = chart_value(chart, res.j);
    res.error = frobenius_distance(phi.matrix(), target.matrix());

    for (; res.iterations < max_iters; ++res.iterations) {
        if (res.error < tol) return res;

        RealVector f;
        try {
            f = project_to_algebra(chart.basis,
                                   matlog_unitary(target * phi.adjoint()).matrix()).coordinates;
        } catch (const BranchCut&) {
            throw NoConvergence("local_solve: target too far from the chart (branch cut)");
        }
        const RealMatrix jac = chart_jacobian(chart, res.j);
        Eigen::FullPivLU<RealMatrix> lu(jac);
        if (!lu.isInvertible()) throw NoConvergence("local_solve: singular chart Jacobian");
        const RealVector step = lu.solve(f);

        double lambda = 1.0;
        bool improved = false;
        RealVector next;
        UnitaryMatrix next_phi = phi;
        double next_err = res.error;
        for (int halving = 0; halving < 30; ++halving, lambda *= 0.5) {
            next = (res.j + lambda * step).cwiseMax(0.0).cwiseMin(2.0);
            next_phi = chart_value(chart, next);
            next_err = frobenius_distance(next_phi.matrix(), target.matrix());
            if (next_err < res.error) {
                improved = true;
                break;
            }
        }
        const bool lower_binding = [&] {
            for (Index k = 0; k < d; ++k) {
                if (res.j(k) <= 0.0 && step(k) < 0.0) return true;
                if (improved && next(k) <= 0.0 && step(k) < 0.0) return true;
            }
            return false;
        }();
        const double moved = improved ? (next - res.j).norm() : 0.0;
        if (!improved || moved < 1e-14) {
            if (lower_binding) {
                throw BoundaryHit("local_solve: j_k = 0 constraint binding at error " +
                                  format_number(res.error));
            }
            throw NoConvergence("local_solve: Newton stagnated at error " + format_number(res.error));
        }
        res.j = next;
        phi = next_phi;
        res.error = next_err;
    }
    if (res.error < tol) return res;
    throw NoConvergence("local_solve: no convergence in " + std::to_string(max_iters) +
                        " iterations, error " + format_number(res.error));
}

double estimate_local_radius(const ChartConstruction& chart, std::size_t probes, double tol,
                             std::uint64_t seed, BudgetCounters* counters) {
    const auto d = static_cast<Index>(chart.d);
    const auto level_passes = [&](double rho) {
        std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
        std::normal_distribution<double> normal;
        for (std::size_t p = 0; p < probes; ++p) {
            RealVector c(d);
            for (Index k = 0; k < d; ++k) c(k) = normal(rng);
            if (c.norm() == 0.0) continue;
            const auto x = algebra_element(chart.basis, c / c.norm());
            const RealVector phases = eigenphases(x);
            const double s = scale_for_distance(phases, rho);
            if (s < 0.0) return false;
            const UnitaryMatrix target = matexp(x, s) * chart.U0;
            if (counters) ++counters->radius_probes;
            try {
                const auto r = local_solve(chart, target, tol);
                if (counters) counters->newton_iterations += r.iterations;
            } catch (const Error&) {
                return false;
            }
        }
        return true;
    };

    double radius = 0.0;
    for (double rho = 0.02; rho <= 2.0; rho *= std::sqrt(2.0)) {
        if (!level_passes(rho)) break;
        radius = rho;
    }
    if (radius > 0.0) return radius;
    for (double rho = 0.01; rho >= 1e-4; rho *= 0.5) {
        if (level_passes(rho)) return rho;
    }
    return 0.0;
}

ChartConstruction build_chart(const GeneratorSet& sampled, const LieBasis& basis,
                              const ChartOptions& options) {
    if (sampled.size() == 0) throw InvalidArgument("build_chart: empty generator set");
    if (basis.d == 0) throw InvalidArgument("build_chart: empty basis");
    if (sampled.n != basis.n) throw DimensionMismatch("build_chart: gens and basis dimensions differ");
    if (!(options.eps_V > 0.0)) throw InvalidArgument("build_chart: eps_V must be > 0");

    ChartConstruction chart;
    chart.gens = select_independent(sampled);
    const GeneratorSet& gens = chart.gens;
    chart.basis = basis;
    chart.s = gens.size();
    chart.d = basis.d;
    chart.newton_iters = options.newton_iters;
    if (chart.s > chart.d) {
        throw ChartFailure("build_chart: " + std::to_string(chart.s) +
                           " independent generators exceed algebra dimension " +
                           std::to_string(chart.d));
    }
    for (const auto& g : gens.generators) {
        const double res = project_to_algebra(basis, g.matrix()).residual;
        if (res > 1e-8) {
            throw ChartFailure("build_chart: generator not in the algebra (residual " +
                               format_number(res) + ")");
        }
    }

    // (i) Conjugators: greedy, best of several random words per direction.
    OrthonormalSpan span(basis.n);
    std::vector<ComplexMatrix> directions;
    for (const auto& g : gens.generators) {
        span.add_if_independent(g.matrix(), 1e-9);
        directions.push_back(g.matrix());
    }
    std::mt19937_64 rng(options.seed);
    std::size_t tries = 0;
    while (span.size() < chart.d) {
        if (tries >= options.conjugator_tries) {
            throw ChartFailure("build_chart: conjugator search exhausted after " +
                               std::to_string(tries) + " words; found " +
                               std::to_string(span.size()) + " of " + std::to_string(chart.d) +
                               " directions");
        }
        double best_rel = 0.0;
        std::size_t best_a = 0;
        ReachableWord best_u(basis.n);
        for (std::size_t c = 0; c < options.candidates_per_direction && tries < options.conjugator_tries;
             ++c, ++tries) {
            ReachableWord u = random_word(gens, rng, options.max_conjugator_factors,
                                          options.max_conjugator_time);
            const ComplexMatrix um = u.value().matrix();
            for (std::size_t a = 0; a < chart.s; ++a) {
                const ComplexMatrix conj = um * gens.generators[a].matrix() * um.adjoint();
                const double rel = span.residual_norm(conj) / conj.norm();
                if (rel > best_rel) {
                    best_rel = rel;
                    best_a = a;
                    best_u = u;
                }
            }
        }
        if (best_rel < options.min_conjugate_residual) continue;
        const ComplexMatrix um = best_u.value().matrix();
        const ComplexMatrix conj = um * gens.generators[best_a].matrix() * um.adjoint();
        span.add_if_independent(conj, 1e-9);
        directions.push_back(conj);
        chart.conjugators.push_back(std::move(best_u));
        chart.abar_indices.push_back(best_a);
    }
    chart.spent.conjugator_tries = static_cast<std::int64_t>(tries);
    chart.basis_gram_min = gram_min_eigenvalue(directions);
    if (chart.basis_gram_min <= options.min_basis_gram) {
        throw ChartFailure("build_chart: chart directions nearly dependent (Gram eigenvalue " +
                           format_number(chart.basis_gram_min) + ")");
    }

    // (ii) Interleaving words.
    for (std::size_t k = 0; k < chart.s; ++k) chart.exponent_generators.push_back(k);
    for (const auto a : chart.abar_indices) chart.exponent_generators.push_back(a);

    const double piece_eps = 0.5 * options.eps_V;
    const auto inverse_of = [&](const ReachableWord& u) {
        return approx_inverse_word(u, gens, piece_eps, options.recurrence_budget, options.recurrence,
                                   &chart.spent);
    };
    const std::size_t extra = chart.d - chart.s;
    for (std::size_t k = 0; k < chart.d; ++k) {
        ReachableWord v = negative_unit_flow(gens, chart.exponent_generators[k], piece_eps, options,
                                             chart.spent);
        if (extra > 0) {
            if (k + 1 == chart.s) {
                v.append(chart.conjugators[0]);
            } else if (k >= chart.s) {
                const std::size_t j = k - chart.s;
                v.append(inverse_of(chart.conjugators[j]));
                if (j + 1 < extra) v.append(chart.conjugators[j + 1]);
            }
        }
        chart.V.push_back(std::move(v));
    }
    for (const auto g : chart.exponent_generators) {
        chart.exponent_eigen.push_back(skew_eigen(gens.generators[g]));
    }

    // (iii) Center and Jacobian.
    const RealVector ones = RealVector::Ones(static_cast<Index>(chart.d));
    chart.center_word = chart_word(chart, ones);
    chart.U0 = chart_value(chart, ones);
    chart.jacobian = chart_jacobian(chart, ones);
    chart.jacobian_abs_det = std::abs(chart.jacobian.determinant());

    // (iv) Validation.
    if (!(chart.jacobian_abs_det > options.jac_tol)) {
        throw ChartFailure("build_chart: |det J| = " + format_number(chart.jacobian_abs_det) +
                           " <= jac_tol");
    }
    if (options.measure_radius) {
        chart.local_radius = estimate_local_radius(chart, options.radius_probes, options.probe_tol,
                                                   options.seed, &chart.spent);
        if (chart.local_radius <= 0.0) {
            throw ChartFailure("build_chart: no probed radius is fully solvable");
        }
    }
    return chart;
}

}  // namespace larc
