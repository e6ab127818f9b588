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

#include "larc/recurrence.hpp"

#include "larc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <optional>
#include <string>

namespace larc {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Rational {
    std::int64_t p;
    std::int64_t q;
};

// First continued-fraction convergent within tol of x, denominator <= max_q.
std::optional<Rational> rationalize(double x, std::int64_t max_q, double tol) {
    std::int64_t h_prev = 1, h_prev2 = 0;
    std::int64_t k_prev = 0, k_prev2 = 1;
    double r = x;
    for (int step = 0; step < 64; ++step) {
        const double a_real = std::floor(r);
        if (std::abs(a_real) > 1e15) break;
        const auto a = static_cast<std::int64_t>(a_real);
        const std::int64_t h = a * h_prev + h_prev2;
        const std::int64_t k = a * k_prev + k_prev2;
        if (k > max_q) break;
        if (std::abs(x - static_cast<double>(h) / static_cast<double>(k)) <= tol) return Rational{h, k};
        const double frac = r - a_real;
        if (frac <= 0.0) break;
        r = 1.0 / frac;
        h_prev2 = h_prev;
        h_prev = h;
        k_prev2 = k_prev;
        k_prev = k;
    }
    return std::nullopt;
}

// Period of t -> exp(A t) when all phase ratios are rational, else nullopt.
std::optional<double> commensurate_period(const RealVector& phases, const RecurrenceOptions& opt) {
    const double ref = phases.cwiseAbs().maxCoeff();
    std::int64_t lcm = 1;
    for (Index k = 0; k < phases.size(); ++k) {
        const auto r = rationalize(phases(k) / ref, opt.max_denominator, opt.rational_tol);
        if (!r) return std::nullopt;
        lcm = std::lcm(lcm, r->q);
        if (lcm > opt.max_denominator) return std::nullopt;
    }
    return kTwoPi * static_cast<double>(lcm) / ref;
}

double matrix_error(const SkewHermitianMatrix& a, double alpha, double t) {
    return frobenius_distance(matexp(a, alpha).matrix(), matexp(a, t).matrix());
}

}  // namespace

double phase_shift_error(const RealVector& phases, double shift) {
    double acc = 0.0;
    for (Index k = 0; k < phases.size(); ++k) {
        const double s = 2.0 * std::sin(0.5 * phases(k) * shift);
        acc += s * s;
    }
    return std::sqrt(acc);
}

RecurrenceResult positive_time_recurrence(const SkewHermitianMatrix& a, double t, double eps,
                                          std::int64_t budget, const RecurrenceOptions& options) {
    if (!(eps > 0.0)) throw InvalidArgument("positive_time_recurrence: eps must be > 0");
    if (!std::isfinite(t)) throw InvalidArgument("positive_time_recurrence: t must be finite");
    RecurrenceResult result;
    if (t >= 0.0) {
        result.alpha = t;
        return result;
    }
    const RealVector phases = eigenphases(a);
    const double theta_max = phases.cwiseAbs().maxCoeff();
    if (theta_max == 0.0) {
        result.alpha = 0.0;
        return result;
    }

    if (options.commensurate_shortcut) {
        if (const auto period = commensurate_period(phases, options)) {
            const double turns = std::ceil(-t / *period);
            const double alpha = t + turns * *period;
            const double err = matrix_error(a, alpha, t);
            if (alpha >= 0.0 && err < eps) {
                result.alpha = alpha;
                result.error = err;
                result.commensurate = true;
                return result;
            }
        }
    }

    const auto n = static_cast<double>(a.dim());
    const double delta = eps / (std::sqrt(2.0 * n) * theta_max);
    const auto m_first = static_cast<std::int64_t>(std::ceil(-t / delta));
    // A lattice point can only pass when the fastest phase alone is within
    // 2 asin(eps / 2) of a multiple of 2 pi.
    const double period = kTwoPi / theta_max;
    const double half_window =
        eps >= 2.0 ? period : 2.0 * std::asin(std::min(1.0, 0.5 * eps)) / theta_max;

    double best_alpha = std::max(t, 0.0);
    double best_err = std::numeric_limits<double>::infinity();
    const auto test = [&](std::int64_t m) -> bool {
        ++result.candidates;
        const double shift = static_cast<double>(m) * delta;
        const double err = phase_shift_error(phases, shift);
        if (err < best_err) {
            best_err = err;
            best_alpha = t + shift;
        }
        if (err >= eps) return false;
        const double alpha = t + shift;
        if (alpha < 0.0) return false;
        const double verified = matrix_error(a, alpha, t);
        if (verified >= eps) return false;
        result.alpha = alpha;
        result.error = verified;
        return true;
    };
    const auto exhausted = [&] {
        throw BudgetExceeded("positive_time_recurrence: budget of " + std::to_string(budget) +
                                 " candidates exhausted",
                             best_alpha, best_err);
    };

    if (2.0 * half_window >= period) {
        for (std::int64_t m = m_first;; ++m) {
            if (result.candidates >= budget) exhausted();
            if (test(m)) return result;
        }
    }

    const double d_first = static_cast<double>(m_first) * delta;
    auto k = static_cast<std::int64_t>(std::floor((d_first - half_window) / period));
    for (;; ++k) {
        const double center = static_cast<double>(k) * period;
        const auto lo = std::max(m_first,
                                 static_cast<std::int64_t>(std::ceil((center - half_window) / delta)));
        const auto hi = static_cast<std::int64_t>(std::floor((center + half_window) / delta));
        for (std::int64_t m = lo; m <= hi; ++m) {
            if (result.candidates >= budget) exhausted();
            if (test(m)) return result;
        }
    }
}

ReachableWord approx_inverse_word(const ReachableWord& word, const GeneratorSet& gens, double eps,
                                  std::int64_t budget, const RecurrenceOptions& options,
                                  BudgetCounters* counters) {
    if (!(eps > 0.0)) throw InvalidArgument("approx_inverse_word: eps must be > 0");
    const auto& fs = word.factors();
    const double per_factor = eps / static_cast<double>(std::max<std::size_t>(fs.size(), 1));
    std::vector<WordFactor> inv;
    inv.reserve(fs.size());
    for (auto it = fs.rbegin(); it != fs.rend(); ++it) {
        if (it->generator >= gens.size()) {
            throw InvalidArgument("approx_inverse_word: generator index out of range");
        }
        if (it->t == 0.0) {
            inv.push_back({it->generator, 0.0});
            continue;
        }
        const auto r = positive_time_recurrence(gens.generators[it->generator], -it->t, per_factor,
                                                budget, options);
        if (counters) counters->recurrence_candidates += r.candidates;
        inv.push_back({it->generator, r.alpha});
    }
    ReachableWord out(gens, std::move(inv));
    return out;
}

PowerResult invert_via_powers(const UnitaryMatrix& u0, double eps, std::int64_t budget) {
    if (!(eps > 0.0)) throw InvalidArgument("invert_via_powers: eps must be > 0");
    if (budget < 1) throw InvalidArgument("invert_via_powers: budget must be >= 1");
    const ComplexMatrix inverse = u0.matrix().adjoint();
    UnitaryAccumulator power(u0);
    ComplexMatrix current = u0.matrix();
    double best_err = std::numeric_limits<double>::infinity();
    std::int64_t best_k = 1;
    for (std::int64_t k = 1; k <= budget; ++k) {
        const double err = (current - inverse).norm();
        if (err < best_err) {
            best_err = err;
            best_k = k;
        }
        if (err < 0.5 * eps) {
            PowerResult r;
            r.k = k;
            r.error = err;
            r.power = UnitaryMatrix::unchecked(current);
            return r;
        }
        power.left_multiply(u0.matrix());
        current = power.value().matrix();
    }
    throw BudgetExceeded("invert_via_powers: no power within budget " + std::to_string(budget),
                         static_cast<double>(best_k), best_err);
}

}  // namespace larc
