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
#include "larc/synthesis.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <numbers>
#include <random>

namespace larc {
namespace {

using namespace testing;

struct Su2Synthesis : ::testing::Test {
    static void SetUpTestSuite() {
        const auto gens = sample_generators(su2_model(), su2_controls(0), RandomStrategy{});
        chart = new ChartConstruction(build_chart(gens, lie_closure(gens)));
    }
    static void TearDownTestSuite() { delete chart; }
    static ChartConstruction* chart;
};
ChartConstruction* Su2Synthesis::chart = nullptr;

void expect_admissible(const ControlProgram& p, const ControlSet& controls) {
    for (const auto& s : p.segments()) {
        EXPECT_GE(s.tau, 0.0);
        EXPECT_TRUE(controls.contains(s.u));
    }
}

TEST(Membership, Examples) {
    const auto su2 = lie_closure(std::vector<SkewHermitianMatrix>{skew(I * sigma_x()), skew(I * sigma_y())});
    std::mt19937_64 rng(2);
    for (int k = 0; k < 20; ++k) EXPECT_LE(membership_residual(su2, haar_special_unitary(2, rng)), 1e-10);
    // -I sits on the branch cut and its principal root iI is outside SU(2);
    // a small shift inside the group settles it.
    const auto cert = certify_membership(su2, UnitaryMatrix(-id2()));
    EXPECT_LE(cert.residual, 1e-10);
    EXPECT_GT(cert.shift.matrix().norm(), 0.0);
    // diag(-1, 1) is on the cut too, with determinant -1.
    ComplexMatrix reflect = id2();
    reflect(0, 0) = -1.0;
    EXPECT_GT(membership_residual(su2, UnitaryMatrix(reflect)), 0.1);
    // In U(2) the principal root of -I works.
    const auto u2 = lie_closure(std::vector<SkewHermitianMatrix>{skew(I * id2()), skew(I * sigma_x()),
                                                                 skew(I * sigma_y())});
    EXPECT_LE(certify_membership(u2, UnitaryMatrix(-id2())).residual, 1e-10);
    // A global phase is not in su(2).
    EXPECT_GT(membership_residual(su2, UnitaryMatrix(std::polar(1.0, 0.3) * id2())), 0.1);
}

TEST(Membership, ProgramEndpointsLieInTheGroup) {
    const auto gens = sample_generators(su2_model(), su2_controls(), RandomStrategy{});
    const auto basis = lie_closure(gens);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0), tau(0.0, 3.0);
    for (int trial = 0; trial < 200; ++trial) {
        ControlProgram p;
        for (int s = 0; s < 10; ++s) p.add({u(rng), u(rng)}, tau(rng));
        EXPECT_LE(membership_residual(basis, propagate_program(su2_model(), p)), 1e-8);
    }
}

TEST_F(Su2Synthesis, IdentityGivesEmptyProgram) {
    const auto r = synthesize(su2_model(), *chart, UnitaryMatrix::identity(2));
    EXPECT_TRUE(r.program.empty());
    EXPECT_EQ(r.error, 0.0);
}

TEST_F(Su2Synthesis, ReachNearIdentity) {
    const UnitaryMatrix f = matexp(skew(I * sigma_z()), 0.2 * chart->local_radius * 0.5 / std::sqrt(2.0));
    const auto r = reach_near_identity(*chart, f, 1e-9);
    EXPECT_LT(r.error, 1e-9);
    for (const auto& x : r.word.factors()) EXPECT_GE(x.t, 0.0);
    const UnitaryMatrix far = matexp(skew(I * sigma_z()), 1.0);
    EXPECT_THROW(reach_near_identity(*chart, far, 1e-9), InvalidArgument);
}

TEST_F(Su2Synthesis, HaarTargets) {
    std::mt19937_64 rng(100);
    for (int trial = 0; trial < 5; ++trial) {
        const auto target = haar_special_unitary(2, rng);
        const auto r = synthesize(su2_model(), *chart, target);
        EXPECT_LT(r.error, 1e-6);
        expect_admissible(r.program, su2_controls());
        const auto x = propagate_program(su2_model(), r.program);
        EXPECT_LT(frobenius_distance(x.matrix(), target.matrix()), 1e-6);
    }
}

TEST_F(Su2Synthesis, BranchCutTarget) {
    const auto r = synthesize(su2_model(), *chart, UnitaryMatrix(-id2()));
    EXPECT_LT(r.error, 1e-6);
    expect_admissible(r.program, su2_controls());
}

TEST_F(Su2Synthesis, RejectsNonMembers) {
    const UnitaryMatrix phase(std::polar(1.0, 0.5) * id2());
    try {
        synthesize(su2_model(), *chart, phase);
        FAIL() << "expected MembershipRejected";
    } catch (const MembershipRejected& e) {
        EXPECT_GT(e.residual(), 1e-8);
    }
}

TEST(Synthesis, AbelianNegativeRotation) {
    // Every control turns the state the same way; e^{+i sigma_z} needs a full
    // turn the other way round.
    const auto model = abelian_model();
    const auto gens = sample_generators(model, abelian_controls(), RandomStrategy{});
    const auto chart = build_chart(gens, lie_closure(gens));
    SynthesisOptions opts;
    opts.eps = 1e-8;
    const UnitaryMatrix target = matexp(skew(I * sigma_z()), 1.0);
    const auto r = synthesize(model, chart, target, opts);
    EXPECT_LT(r.error, 1e-8);
    expect_admissible(r.program, abelian_controls());
    double phase = 0.0;
    for (const auto& s : r.program.segments()) phase += s.u[0] * s.tau;
    // exp(-i phase sigma_z) = exp(+i sigma_z) needs phase = 2 pi k - 1.
    EXPECT_GT(phase, 0.0);
    EXPECT_NEAR(std::remainder(phase + 1.0, 2 * std::numbers::pi), 0.0, 1e-8);
    EXPECT_THROW(synthesize(model, chart, matexp(skew(I * sigma_x()), 1.0), opts), MembershipRejected);
}

TEST(Synthesis, ReportSchema) {
    SynthesisResult r;
    r.program.add({0.5}, 1.5);
    const auto j = synthesis_report(r);
    EXPECT_EQ(j["total_duration"], 1.5);
    EXPECT_TRUE(j.contains("budget"));
    EXPECT_EQ(j["program"]["segments"].size(), 1u);
}

}  // namespace
}  // namespace larc
