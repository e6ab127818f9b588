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

#include "larc/closure.hpp"
#include "larc/errors.hpp"
#include "larc/model.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

namespace larc {
namespace {

using namespace testing;

HamiltonianModel drift_model() {
    // sigma_z + u sigma_x + u^2 sigma_y
    return HamiltonianModel::polynomial(
        2, 1, {{{0}, herm(sigma_z())}, {{1}, herm(sigma_x())}, {{2}, herm(sigma_y())}});
}

TEST(EvaluateModel, PolynomialValues) {
    const auto m = drift_model();
    EXPECT_LT((evaluate_model(m, {0.0}).matrix() - sigma_z()).norm(), 1e-15);
    EXPECT_LT((evaluate_model(m, {1.0}).matrix() - (sigma_z() + sigma_x() + sigma_y())).norm(), 1e-15);
    const auto prod = HamiltonianModel::polynomial(2, 2, {{{1, 1}, herm(sigma_x())}});
    EXPECT_LT((evaluate_model(prod, {2.0, 3.0}).matrix() - 6.0 * sigma_x()).norm(), 1e-14);
}

TEST(EvaluateModel, ArityAndTableErrors) {
    EXPECT_THROW(evaluate_model(drift_model(), {1.0, 2.0}), InvalidArgument);
    const auto tab = HamiltonianModel::tabulated(2, 1, {{{0.5}, herm(sigma_x())}, {{1.5}, herm(sigma_y())}});
    EXPECT_LT((evaluate_model(tab, {1.5}).matrix() - sigma_y()).norm(), 1e-15);
    EXPECT_THROW(evaluate_model(tab, {1.0}), InvalidArgument);
}

TEST(HamiltonianModel, RejectsRepeatedKeys) {
    EXPECT_THROW(HamiltonianModel::polynomial(2, 1, {{{1}, herm(sigma_x())}, {{1}, herm(sigma_y())}}),
                 InvalidArgument);
    EXPECT_THROW(HamiltonianModel::tabulated(2, 1, {{{1.0}, herm(sigma_x())}, {{1.0}, herm(sigma_y())}}),
                 InvalidArgument);
    EXPECT_THROW(HamiltonianModel::polynomial(2, 2, {{{1}, herm(sigma_x())}}), InvalidArgument);
}

TEST(ControlSet, Validation) {
    EXPECT_THROW(ControlSet::box({1.0}, {0.0}), InvalidArgument);
    EXPECT_THROW(ControlSet::finite({}), InvalidArgument);
    const auto box = ControlSet::box({0.0, -1.0}, {1.0, 1.0});
    EXPECT_TRUE(box.contains({0.5, 0.0}));
    EXPECT_FALSE(box.contains({1.5, 0.0}));
}

TEST(SampleGenerators, ZeroHamiltonianGivesEmptySet) {
    const auto g = sample_generators(nonbilinear_model(), ControlSet::finite({{0.0}}), ExhaustiveStrategy{});
    EXPECT_EQ(g.span_dimension, 0u);
    EXPECT_TRUE(g.all_zero);
}

TEST(SampleGenerators, NonBilinearTwoPointsSpanXY) {
    const auto g = sample_generators(nonbilinear_model(), ControlSet::finite({{1.0}, {2.0}}),
                                     ExhaustiveStrategy{});
    ASSERT_EQ(g.span_dimension, 2u);
    // Hand-solved Vandermonde: sigma_x = 2 H(1) - H(2) / 2, sigma_y = (H(2) - 2 H(1)) / 2.
    const ComplexMatrix h1 = I * g.generators[0].matrix();
    const ComplexMatrix h2 = I * g.generators[1].matrix();
    EXPECT_LT((2.0 * h1 - 0.5 * h2 - sigma_x()).norm(), 1e-14);
    EXPECT_LT((0.5 * (h2 - 2.0 * h1) - sigma_y()).norm(), 1e-14);
    for (std::size_t k = 0; k < g.size(); ++k) {
        const auto expected = generator_at(nonbilinear_model(), g.control_points[k]).matrix();
        EXPECT_LT((g.generators[k].matrix() * g.scales[k] - expected).norm(), 1e-12);
    }
}

TEST(SampleGenerators, DriftModelOnGridHasDimensionThree) {
    const auto g = sample_generators(drift_model(), ControlSet::box({-1.0}, {1.0}), GridStrategy{3});
    EXPECT_EQ(g.span_dimension, 3u);
}

TEST(SampleGenerators, ExhaustiveNeedsFiniteSet) {
    EXPECT_THROW(sample_generators(drift_model(), ControlSet::box({-1.0}, {1.0}), ExhaustiveStrategy{}),
                 InvalidArgument);
}

TEST(SampleGenerators, RandomStopsAfterWindow) {
    SamplingOptions opt;
    const auto g = sample_generators(nonbilinear_model(), ControlSet::box({-1.0}, {1.0}, 42),
                                     RandomStrategy{100000}, opt);
    EXPECT_EQ(g.span_dimension, 2u);
    EXPECT_EQ(g.window_used, 8u);
    EXPECT_LE(g.samples_evaluated, 2u + 8u + 2u);
}

TEST(SampleGenerators, SeedIsReproducible) {
    const auto a = sample_generators(su2_model(), su2_controls(5), RandomStrategy{50});
    const auto b = sample_generators(su2_model(), su2_controls(5), RandomStrategy{50});
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t k = 0; k < a.size(); ++k) EXPECT_EQ(a.control_points[k], b.control_points[k]);
}

TEST(SampleGenerators, ShuffleInvariantDimension) {
    std::vector<ControlVector> pts;
    for (int k = -3; k <= 3; ++k) pts.push_back({0.5 * k});
    const auto base = sample_generators(drift_model(), ControlSet::finite(pts), ExhaustiveStrategy{});
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        std::shuffle(pts.begin(), pts.end(), rng);
        const auto g = sample_generators(drift_model(), ControlSet::finite(pts), ExhaustiveStrategy{});
        EXPECT_EQ(g.span_dimension, base.span_dimension);
    }
}

TEST(SampleGenerators, MonotoneInSampleList) {
    std::vector<ControlVector> pts = {{0.0}, {0.3}, {-0.7}, {1.1}, {2.0}};
    std::size_t prev = 0;
    for (std::size_t k = 1; k <= pts.size(); ++k) {
        const auto g = sample_generators(drift_model(),
                                         ControlSet::finite({pts.begin(), pts.begin() + static_cast<long>(k)}),
                                         ExhaustiveStrategy{});
        EXPECT_GE(g.span_dimension, prev);
        prev = g.span_dimension;
    }
}

TEST(SampleGenerators, RecoversCoefficientSpanDimension) {
    // Four monomials in two controls; coefficients with a planted dependence.
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        const Index n = 3;
        std::vector<ComplexMatrix> coeff;
        for (int k = 0; k < 3; ++k) coeff.push_back(I * random_skew(n, rng).matrix());
        coeff.push_back(coeff[0] - 2.0 * coeff[2]);
        const auto model = HamiltonianModel::polynomial(
            n, 2,
            {{{0, 0}, herm(coeff[0])}, {{1, 0}, herm(coeff[1])}, {{0, 1}, herm(coeff[2])}, {{1, 1}, herm(coeff[3])}});
        OrthonormalSpan direct(n);
        for (const auto& c : coeff) direct.add_if_independent(c, 1e-9);
        const auto g = sample_generators(model, ControlSet::box({-1.0, -1.0}, {1.0, 1.0}, 100 + trial),
                                         RandomStrategy{200});
        EXPECT_EQ(g.span_dimension, direct.size());
    }
}

TEST(SignConvention, ClosureMatchesEitherSign) {
    const auto g = sample_generators(drift_model(), ControlSet::box({-1.0}, {1.0}), GridStrategy{4});
    std::vector<SkewHermitianMatrix> flipped;
    for (const auto& a : g.generators) flipped.push_back(a.scaled(-1.0));
    EXPECT_EQ(lie_closure(g).d, lie_closure(flipped).d);
}

TEST(SelectIndependent, DropsMultiplesAndCombinations) {
    GeneratorSet g;
    g.n = 2;
    g.generators = {skew(I * sigma_x()), skew(2.0 * I * sigma_x()), skew(I * sigma_y())};
    g.control_points = {{1.0}, {2.0}, {3.0}};
    g.scales = {1.0, 1.0, 1.0};
    g.span_dimension = 3;
    const auto s = select_independent(g);
    ASSERT_EQ(s.size(), 2u);
    EXPECT_LT((s.generators[0].matrix() - I * sigma_x() / std::sqrt(2.0)).norm(), 1e-15);
    EXPECT_LT((s.generators[1].matrix() - I * sigma_y() / std::sqrt(2.0)).norm(), 1e-15);
    EXPECT_NEAR(s.scales[0], std::sqrt(2.0), 1e-15);
    EXPECT_EQ(s.control_points[1], (ControlVector{3.0}));

    g.generators = {skew(I * sigma_x()), skew(I * sigma_y()), skew(I * (sigma_x() + sigma_y()))};
    EXPECT_EQ(select_independent(g).size(), 2u);

    const auto again = select_independent(s);
    ASSERT_EQ(again.size(), s.size());
    for (std::size_t k = 0; k < s.size(); ++k) {
        EXPECT_LT((again.generators[k].matrix() - s.generators[k].matrix()).norm(), 1e-15);
        EXPECT_NEAR(again.scales[k], s.scales[k], 1e-15);
    }
    EXPECT_EQ(select_independent(GeneratorSet{}).size(), 0u);
}

TEST(ModelJson, ParsesConfigFragment) {
    const auto j = io::parse(R"({
      "type": "polynomial",
      "terms": [
        {"exponents": [1, 0], "matrix": {"n": 2, "entries": [[[0,0],[1,0]],[[1,0],[0,0]]]}},
        {"exponents": [0, 1], "matrix": {"n": 2, "entries": [[[0,0],[0,-1]],[[0,1],[0,0]]]}}
      ]})");
    const auto m = model_from_json(j, 2, 2);
    EXPECT_LT((evaluate_model(m, {1.0, 2.0}).matrix() - (sigma_x() + 2.0 * sigma_y())).norm(), 1e-15);
    const auto back = model_from_json(model_to_json(m), 2, 2);
    EXPECT_LT((evaluate_model(back, {0.3, -0.4}).matrix() - evaluate_model(m, {0.3, -0.4}).matrix()).norm(),
              1e-15);
    EXPECT_THROW(model_from_json(io::parse(R"({"type":"spline"})"), 2, 2), ParseError);
    const auto bad = io::parse(R"({"type":"polynomial","terms":[{"exponents":[1],"matrix":{"n":2,"entries":[[[0,0],[0,1]],[[0,1],[0,0]]]}}]})");
    EXPECT_THROW(model_from_json(bad, 2, 1), ParseError);
    const auto cs = control_set_from_json(io::parse(R"({"type":"finite","points":[[1],[2]]})"), 1, 3);
    EXPECT_FALSE(cs.is_box());
    EXPECT_EQ(cs.seed(), 3u);
    EXPECT_THROW(control_set_from_json(io::parse(R"({"type":"box","lower":[1],"upper":[0]})"), 1, 0),
                 ParseError);
}

}  // namespace
}  // namespace larc
