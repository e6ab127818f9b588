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

#include "larc/errors.hpp"
#include "larc/program.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <numbers>
#include <random>

namespace larc {
namespace {

using namespace testing;

ControlProgram random_su2_program(std::mt19937_64& rng, std::size_t segments) {
    std::uniform_real_distribution<double> u(-1.0, 1.0), tau(0.0, 2.0);
    ControlProgram p;
    for (std::size_t k = 0; k < segments; ++k) p.add({u(rng), u(rng)}, tau(rng));
    return p;
}

TEST(Propagate, AbelianQuarterTurn) {
    ControlProgram p({{{1.0}, std::numbers::pi / 2}});
    const auto x = propagate_program(abelian_model(), p);
    EXPECT_LT((x.matrix() - (-I * sigma_z())).norm(), 1e-14);
    EXPECT_LT((propagate_program(abelian_model(), ControlProgram{}).matrix() - id2()).norm(), 1e-15);
}

TEST(Propagate, LaterSegmentsMultiplyOnTheLeft) {
    ControlProgram p({{{1.0, 0.0}, 0.3}, {{0.0, 1.0}, 0.7}});
    // exp(-i a sigma) = cos(a) I - i sin(a) sigma.
    const ComplexMatrix first = std::cos(0.3) * id2() - I * std::sin(0.3) * sigma_x();
    const ComplexMatrix second = std::cos(0.7) * id2() - I * std::sin(0.7) * sigma_y();
    EXPECT_LT((propagate_program(su2_model(), p).matrix() - second * first).norm(), 1e-13);
}

TEST(Propagate, SemigroupProperty) {
    std::mt19937_64 rng(3);
    const auto model = su2_model();
    for (int trial = 0; trial < 50; ++trial) {
        const auto p = random_su2_program(rng, 1 + trial % 7);
        const auto q = random_su2_program(rng, 1 + trial % 5);
        const ComplexMatrix lhs = propagate_program(model, p.then(q)).matrix();
        const ComplexMatrix rhs = propagate_program(model, q).matrix() * propagate_program(model, p).matrix();
        EXPECT_LT((lhs - rhs).norm(), 1e-12);
    }
}

TEST(Propagate, LongProgramStaysUnitary) {
    std::mt19937_64 rng(5);
    const auto x = propagate_program(su2_model(), random_su2_program(rng, 10000));
    EXPECT_LT((x.matrix().adjoint() * x.matrix() - id2()).norm(), 1e-12);
}

TEST(Propagate, ValidatesArity) {
    ControlProgram p({{{1.0}, 0.0}});
    EXPECT_THROW(propagate_program(su2_model(), p), InvalidArgument);
}

TEST(ControlProgram, RejectsBadDurations) {
    EXPECT_THROW(ControlProgram({{{1.0}, -0.1}}), InvalidArgument);
    EXPECT_THROW(ControlProgram({{{1.0}, std::numeric_limits<double>::infinity()}}), InvalidArgument);
    ControlProgram p;
    EXPECT_THROW(p.add({1.0}, std::nan("")), InvalidArgument);
    p.add({1.0}, 0.25);
    p.add({0.5}, 0.5);
    EXPECT_DOUBLE_EQ(p.total_duration(), 0.75);
}

TEST(ControlProgram, JsonRoundTrip) {
    std::mt19937_64 rng(9);
    const auto p = random_su2_program(rng, 12);
    const auto back = program_from_json(io::parse(io::dump(program_to_json(p))));
    ASSERT_EQ(back.size(), p.size());
    for (std::size_t k = 0; k < p.size(); ++k) {
        EXPECT_EQ(back.segments()[k].u, p.segments()[k].u);
        EXPECT_EQ(back.segments()[k].tau, p.segments()[k].tau);
    }
    EXPECT_THROW(program_from_json(io::parse(R"({"segments": [{"u": [1], "tau": -1}]})")), ParseError);
    EXPECT_THROW(program_from_json(io::parse(R"({"segs": []})")), ParseError);
}

TEST(ReachableWord, ValueMatchesProgram) {
    const auto gens = sample_generators(su2_model(), su2_controls(2), RandomStrategy{50});
    ASSERT_GE(gens.size(), 2u);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::size_t> g(0, gens.size() - 1);
    std::uniform_real_distribution<double> t(0.0, 3.0);
    for (int trial = 0; trial < 100; ++trial) {
        ReachableWord w(gens.n);
        const int len = 1 + trial % 40;
        ComplexMatrix direct = id2();
        for (int f = 0; f < len; ++f) {
            const auto k = g(rng);
            const double tk = t(rng);
            w.append(gens, k, tk);
            direct = direct * matexp(gens.generators[k], tk).matrix();
        }
        EXPECT_LT((w.value().matrix() - direct).norm(), 1e-11);
        const auto program = word_to_program(w, gens);
        EXPECT_EQ(program.size(), w.size());
        EXPECT_LT(frobenius_distance(propagate_program(su2_model(), program).matrix(), w.value().matrix()), 1e-10);
    }
}

TEST(ReachableWord, RepeatedAndAppend) {
    const auto gens = sample_generators(su2_model(), su2_controls(2), RandomStrategy{50});
    ReachableWord w(gens, {{0, 0.4}, {1, 1.1}});
    const auto w3 = w.repeated(3);
    EXPECT_EQ(w3.size(), 6u);
    const ComplexMatrix v = w.value().matrix();
    EXPECT_LT((w3.value().matrix() - v * v * v).norm(), 1e-13);
    ReachableWord x = w;
    x.append(w3);
    EXPECT_LT((x.value().matrix() - v * v * v * v).norm(), 1e-13);
    EXPECT_THROW(w.append(gens, 0, -1.0), InvalidArgument);
    EXPECT_THROW(w.append(gens, 99, 1.0), InvalidArgument);
}

TEST(Budget, Accumulates) {
    BudgetCounters a, b;
    a.recurrence_candidates = 3;
    b.recurrence_candidates = 4;
    b.newton_iterations = 2;
    a += b;
    EXPECT_EQ(a.recurrence_candidates, 7);
    EXPECT_EQ(budget_to_json(a)["newton_iterations"], 2);
}

}  // namespace
}  // namespace larc
