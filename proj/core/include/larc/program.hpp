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

// Piecewise-constant control programs and reachable words.
//
// Ordering convention, fixed here for the whole library: a program is applied
// in time order and each new segment multiplies on the LEFT,
//   X <- exp(-i H(u_k) tau_k) X,
// whereas a ReachableWord lists factors left to right as they appear in the
// matrix product. word_to_program therefore reverses the factor order.

#pragma once

#include "larc/matrix.hpp"
#include "larc/matrix_io.hpp"
#include "larc/model.hpp"

#include <cstdint>
#include <vector>

namespace larc {

struct Segment {
    ControlVector u;
    double tau = 0.0;
};

class ControlProgram {
public:
    ControlProgram() = default;
    // Throws InvalidArgument on a negative or non-finite duration.
    explicit ControlProgram(std::vector<Segment> segments);

    void add(ControlVector u, double tau);
    // Runs `this` first, then `later`.
    ControlProgram then(const ControlProgram& later) const;

    const std::vector<Segment>& segments() const noexcept { return segments_; }
    std::size_t size() const noexcept { return segments_.size(); }
    bool empty() const noexcept { return segments_.empty(); }
    double total_duration() const noexcept;

private:
    std::vector<Segment> segments_;
};

UnitaryMatrix propagate_program(const HamiltonianModel& model, const ControlProgram& program);

io::Json program_to_json(const ControlProgram& program);
ControlProgram program_from_json(const io::Json& j);

struct WordFactor {
    std::size_t generator = 0;  // index into a GeneratorSet
    double t = 0.0;
};

// Product exp(A_{g1} t1) exp(A_{g2} t2) ... with every t >= 0, so the value
// is reachable. The product is cached and re-projected onto U(n) every
// UnitaryAccumulator::kReprojectEvery factors.
class ReachableWord {
public:
    explicit ReachableWord(Index n);
    ReachableWord(const GeneratorSet& gens, std::vector<WordFactor> factors);

    // value <- value * exp(A_g t).
    void append(const GeneratorSet& gens, std::size_t generator, double t);
    // value <- value * other.value.
    void append(const ReachableWord& other);

    ReachableWord repeated(std::size_t times) const;

    Index dim() const noexcept { return value_.rows(); }
    const std::vector<WordFactor>& factors() const noexcept { return factors_; }
    std::size_t size() const noexcept { return factors_.size(); }
    UnitaryMatrix value() const { return UnitaryMatrix::unchecked(value_); }

private:
    void multiply_right(const ComplexMatrix& m, std::size_t factor_count);

    std::vector<WordFactor> factors_;
    ComplexMatrix value_;
    std::size_t since_projection_ = 0;
};

// Each factor exp(A_g t), A_g = -i H(u_g) / scale_g, becomes the segment
// (u_g, t / scale_g).
ControlProgram word_to_program(const ReachableWord& word, const GeneratorSet& gens);

struct BudgetCounters {
    std::int64_t recurrence_candidates = 0;
    std::int64_t power_steps = 0;
    std::int64_t newton_iterations = 0;
    std::int64_t conjugator_tries = 0;
    std::int64_t radius_probes = 0;

    BudgetCounters& operator+=(const BudgetCounters& o);
};

io::Json budget_to_json(const BudgetCounters& b);

}  // namespace larc
