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

// Positive-time substitutes for negative-time flows and for inverses.
//
// On a compact group every one-parameter subgroup is almost periodic, so
// exp(A t) with t < 0 is approximated by exp(A alpha) with alpha >= 0, and
// U^{-1} by a positive power of U. Existence is guaranteed but no bound on
// alpha or on the power is, hence the explicit budgets.

#pragma once

#include "larc/matrix.hpp"
#include "larc/model.hpp"
#include "larc/program.hpp"

#include <cstdint>

namespace larc {

struct RecurrenceOptions {
    // Use the exact period when all eigenphase ratios are rational.
    bool commensurate_shortcut = true;
    std::int64_t max_denominator = 1'000'000;
    double rational_tol = 1e-14;
};

struct RecurrenceResult {
    double alpha = 0.0;
    double error = 0.0;  // ||exp(A alpha) - exp(A t)||_F
    std::int64_t candidates = 0;
    bool commensurate = false;
};

// Returns alpha >= 0 with ||exp(A alpha) - exp(A t)||_F < eps.
//
// For t >= 0 this is t itself. Otherwise the exact period is used when the
// eigenphases are commensurate; in general the search walks the lattice
// alpha = t + m delta, delta = eps / (sqrt(2n) max|theta|), in increasing m
// and returns the first point meeting the bound. Lattice points where the
// fastest phase alone already violates the bound are skipped without
// being counted, so `budget` bounds the number of points actually tested.
// Throws BudgetExceeded (best alpha, best error) when the budget runs out.
RecurrenceResult positive_time_recurrence(const SkewHermitianMatrix& a, double t, double eps,
                                          std::int64_t budget,
                                          const RecurrenceOptions& options = {});

// Error of exp(A (t + shift)) against exp(A t), from eigenphases only.
double phase_shift_error(const RealVector& phases, double shift);

// Positive-time approximation of word^{-1}: factors reversed, each exp(A t)
// replaced by exp(A alpha) with alpha from positive_time_recurrence(A, -t),
// per-factor tolerance eps / (number of factors).
ReachableWord approx_inverse_word(const ReachableWord& word, const GeneratorSet& gens, double eps,
                                  std::int64_t budget, const RecurrenceOptions& options = {},
                                  BudgetCounters* counters = nullptr);

struct PowerResult {
    std::int64_t k = 1;
    double error = 0.0;  // ||U0^k - U0^{-1}||_F
    UnitaryMatrix power = UnitaryMatrix::identity(1);
};

// Smallest k in [1, budget] with ||U0^k - U0^{-1}||_F < eps / 2, by
// incremental powering with periodic re-projection.
PowerResult invert_via_powers(const UnitaryMatrix& u0, double eps, std::int64_t budget);

}  // namespace larc
