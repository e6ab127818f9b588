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

#include "larc/synthesis.hpp"

#include "larc/errors.hpp"
#include "larc/recurrence.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <random>
#include <string>

namespace larc {

MembershipCertificate certify_membership(const LieBasis& basis, const UnitaryMatrix& u,
                                         int max_halvings, double shift_size) {
    if (u.dim() != basis.n) throw DimensionMismatch("certify_membership: dimension mismatch");
    const auto certificate = [&](SkewHermitianMatrix log, int halvings, SkewHermitianMatrix shift) {
        MembershipCertificate cert;
        cert.residual = project_to_algebra(basis, log.matrix()).residual;
        cert.halvings = halvings;
        cert.shift = std::move(shift);
        cert.log_of_root = std::move(log);
        return cert;
    };
    const auto no_shift = SkewHermitianMatrix::zero(u.dim());
    try {
        return certificate(matlog_unitary(u), 0, no_shift);
    } catch (const BranchCut&) {
    }

    std::optional<MembershipCertificate> best;
    const auto keep = [&](MembershipCertificate c) {
        if (!best || c.residual < best->residual) best = std::move(c);
    };
    UnitaryMatrix root = u;
    for (int h = 1; h <= max_halvings; ++h) {
        root = principal_sqrt(root);
        try {
            keep(certificate(matlog_unitary(root), h, no_shift));
            break;
        } catch (const BranchCut&) {
        }
    }
    std::mt19937_64 rng(0x6a09e667f3bcc909ULL);
    std::normal_distribution<double> normal;
    for (int attempt = 0; attempt < std::max(max_halvings, 1); ++attempt) {
        RealVector c(static_cast<Index>(basis.d));
        for (Index k = 0; k < c.size(); ++k) c(k) = normal(rng);
        if (c.norm() == 0.0) continue;
        const auto x = algebra_element(basis, c * (shift_size / c.norm()));
        try {
            keep(certificate(matlog_unitary(matexp(x, -1.0) * u), 0, x));
            break;
        } catch (const BranchCut&) {
        }
    }
    if (best) return *best;
    throw MembershipRejected("certify_membership: branch cut persists after " +
                                 std::to_string(max_halvings) + " square roots and shifts",
                             std::numeric_limits<double>::infinity());
}

double membership_residual(const LieBasis& basis, const UnitaryMatrix& u) {
    try {
        return certify_membership(basis, u).residual;
    } catch (const MembershipRejected& e) {
        return e.residual();
    }
}

ReachResult reach_near_identity(const ChartConstruction& chart, const UnitaryMatrix& f, double eps,
                                const ReachOptions& options) {
    if (!(eps > 0.0)) throw InvalidArgument("reach_near_identity: eps must be > 0");
    if (f.dim() != chart.basis.n) throw DimensionMismatch("reach_near_identity: dimension mismatch");
    const double rho = chart.local_radius * options.safety;
    const double dist = frobenius_distance(f.matrix(), ComplexMatrix::Identity(f.dim(), f.dim()));
    if (!(dist < 0.5 * rho)) {
        throw InvalidArgument("reach_near_identity: ||F - I||_F = " + format_number(dist) +
                              " is not below rho / 2 = " + format_number(0.5 * rho));
    }

    ReachResult out;
    const auto powers = invert_via_powers(chart.U0, rho, options.power_budget);
    out.k = powers.k;
    out.spent.power_steps += powers.k;

    // ||X - U0|| <= ||F - I|| + ||U0^k - U0^{-1}|| < rho <= local_radius.
    const UnitaryMatrix x = powers.power.adjoint() * f;
    const auto sol = local_solve(chart, x, 0.5 * eps);
    out.spent.newton_iterations += sol.iterations;
    out.j = sol.j;

    out.word = chart.center_word.repeated(static_cast<std::size_t>(powers.k));
    out.word.append(chart_word(chart, sol.j));
    out.error = frobenius_distance(out.word.value().matrix(), f.matrix());
    return out;
}

SynthesisResult synthesize(const HamiltonianModel& model, const ChartConstruction& chart,
                           const UnitaryMatrix& target, const SynthesisOptions& options) {
    if (target.dim() != model.dim() || target.dim() != chart.basis.n) {
        throw DimensionMismatch("synthesize: target dimension mismatch");
    }
    if (!(options.eps > 0.0)) throw InvalidArgument("synthesize: eps must be > 0");
    const Index n = target.dim();
    const ComplexMatrix identity = ComplexMatrix::Identity(n, n);

    SynthesisResult result;
    result.target = target;
    result.budget_spent = chart.spent;

    if (frobenius_distance(target.matrix(), identity) < options.eps) {
        result.achieved = propagate_program(model, result.program);
        result.error = frobenius_distance(result.achieved.matrix(), target.matrix());
        return result;
    }

    const double rho = chart.local_radius * options.reach.safety;
    const double step_limit = options.step_fraction * 0.5 * rho;
    const auto cert = certify_membership(chart.basis, target, options.max_halvings, 0.5 * step_limit);
    result.membership_residual = cert.residual;
    result.halvings = cert.halvings;
    if (cert.residual > options.membership_tol) {
        throw MembershipRejected("synthesize: target not certified in e^L (log residual " +
                                     format_number(cert.residual) + ")",
                                 cert.residual);
    }

    // Path exp(s B), s in [0, 1], to the root target^{1/2^h}.
    const auto coords = project_to_algebra(chart.basis, cert.log_of_root.matrix()).coordinates;
    const SkewHermitianMatrix b = algebra_element(chart.basis, coords);
    const UnitaryMatrix root = matexp(cert.log_of_root, 1.0);
    const RealVector phases = eigenphases(b);

    std::size_t steps = 1;
    while (phase_shift_error(phases, 1.0 / static_cast<double>(steps)) >= step_limit) {
        if (++steps > 1'000'000) throw NoConvergence("synthesize: continuation needs too many steps");
    }
    result.steps = steps;

    const double repeats = std::ldexp(1.0, cert.halvings);
    const double step_eps = 0.25 * options.eps / repeats;
    std::vector<ReachableWord> words;
    words.reserve(steps);
    UnitaryMatrix partial = UnitaryMatrix::identity(n);
    for (std::size_t i = 1; i <= steps; ++i) {
        const UnitaryMatrix goal =
            i == steps ? root : matexp(b, static_cast<double>(i) / static_cast<double>(steps));
        const UnitaryMatrix f = goal * partial.adjoint();
        if (frobenius_distance(f.matrix(), identity) >= 0.5 * rho) {
            throw NoConvergence("synthesize: continuation step " + std::to_string(i) +
                                " left the identity neighbourhood");
        }
        auto reached = reach_near_identity(chart, f, step_eps, options.reach);
        result.budget_spent += reached.spent;
        partial = polar_project((reached.word.value() * partial).matrix());
        words.push_back(std::move(reached.word));
    }

    // Later steps multiply on the left.
    ReachableWord total(n);
    for (auto it = words.rbegin(); it != words.rend(); ++it) total.append(*it);
    if (cert.halvings > 0) total = total.repeated(static_cast<std::size_t>(repeats));
    if (cert.shift.matrix().norm() > 0.0) {
        // target = exp(shift) * root, and exp(shift) is one short step from I.
        const UnitaryMatrix f = target * total.value().adjoint();
        auto reached = reach_near_identity(chart, f, 0.25 * options.eps, options.reach);
        result.budget_spent += reached.spent;
        reached.word.append(total);
        total = std::move(reached.word);
    }

    result.program = word_to_program(total, chart.gens);
    result.achieved = propagate_program(model, result.program);
    result.error = frobenius_distance(result.achieved.matrix(), target.matrix());
    return result;
}

io::Json synthesis_report(const SynthesisResult& result) {
    io::Json out = io::Json::object();
    out["error"] = result.error;
    out["total_duration"] = result.program.total_duration();
    out["steps"] = result.steps;
    out["budget"] = budget_to_json(result.budget_spent);
    out["program"] = program_to_json(result.program);
    return out;
}

}  // namespace larc
