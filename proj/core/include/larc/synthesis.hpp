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

// Global synthesis: any target in e^L as a nonnegative-duration program.
//
// The chart covers a ball around U0. A power U0^k close to U0^{-1} shifts
// that ball onto a neighbourhood of the identity, and a path exp(s B),
// s in [0, 1], from I to the target is walked in steps that each stay inside
// the neighbourhood.

#pragma once

#include "larc/chart.hpp"
#include "larc/closure.hpp"
#include "larc/matrix.hpp"
#include "larc/model.hpp"
#include "larc/program.hpp"

#include <cstdint>

namespace larc {

struct MembershipCertificate {
    double residual = 0.0;  // distance of the log from L
    int halvings = 0;       // square roots taken to leave the branch cut
    // U = exp(shift) exp(log_of_root)^(2^halvings); shift is zero unless a
    // square root could not leave the cut.
    SkewHermitianMatrix shift = SkewHermitianMatrix::zero(1);
    SkewHermitianMatrix log_of_root = SkewHermitianMatrix::zero(1);
};

// Certifies U in e^L through its principal logarithm. At a branch cut two
// routes are tried and the smaller residual kept: principal square roots (at
// most `max_halvings`), and left shifts U -> exp(-X) U by seeded random X in L
// with ||X||_F = shift_size, which moves degenerate points such as -I off the
// cut without changing membership.
MembershipCertificate certify_membership(const LieBasis& basis, const UnitaryMatrix& u,
                                         int max_halvings = 6, double shift_size = 0.05);

// Residual of certify_membership, or +inf if every route hit a cut.
double membership_residual(const LieBasis& basis, const UnitaryMatrix& u);

struct ReachOptions {
    double safety = 0.5;
    std::int64_t power_budget = 1'000'000;
};

struct ReachResult {
    ReachableWord word{1};
    std::int64_t k = 0;
    RealVector j;
    double error = 0.0;  // ||word value - F||_F
    BudgetCounters spent;
};

// Reachable word within eps of F, for ||F - I||_F < rho / 2 where
// rho = local_radius * safety. Writes F = U0^k X with U0^k ~ U0^{-1} and
// solves Phi(j) = X.
ReachResult reach_near_identity(const ChartConstruction& chart, const UnitaryMatrix& f, double eps,
                                const ReachOptions& options = {});

struct SynthesisOptions {
    double eps = 1e-6;
    double membership_tol = 1e-8;
    int max_halvings = 6;
    ReachOptions reach;
    // Fraction of rho / 2 used by each continuation step.
    double step_fraction = 0.9;
};

struct SynthesisResult {
    UnitaryMatrix target = UnitaryMatrix::identity(1);
    UnitaryMatrix achieved = UnitaryMatrix::identity(1);
    ControlProgram program;
    double error = 0.0;
    std::size_t steps = 0;
    int halvings = 0;
    double membership_residual = 0.0;
    BudgetCounters budget_spent;
};

// Throws MembershipRejected, BudgetExceeded or NoConvergence. On return,
// `achieved` is the re-propagated program endpoint and `error` is measured
// against it.
SynthesisResult synthesize(const HamiltonianModel& model, const ChartConstruction& chart,
                           const UnitaryMatrix& target, const SynthesisOptions& options = {});

io::Json synthesis_report(const SynthesisResult& result);

}  // namespace larc
