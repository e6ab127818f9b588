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
#include "larc/closure.hpp"
#include "larc/recurrence.hpp"
#include "larc/synthesis.hpp"

#include <benchmark/benchmark.h>

#include <complex>
#include <random>

namespace {

using larc::ComplexMatrix;
using larc::Index;
using larc::SkewHermitianMatrix;
using Complex = std::complex<double>;

SkewHermitianMatrix random_skew(Index n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    ComplexMatrix m(n, n);
    for (Index r = 0; r < n; ++r)
        for (Index c = 0; c < n; ++c) m(r, c) = Complex(g(rng), g(rng));
    return SkewHermitianMatrix((0.5 * (m - m.adjoint())).eval());
}

ComplexMatrix pauli(char p) {
    ComplexMatrix m(2, 2);
    switch (p) {
        case 'X': m << 0, 1, 1, 0; break;
        case 'Y': m << 0, Complex(0, -1), Complex(0, 1), 0; break;
        case 'Z': m << 1, 0, 0, -1; break;
        default: m.setIdentity();
    }
    return m;
}

ComplexMatrix pauli_string(const std::string& s) {
    ComplexMatrix out = ComplexMatrix::Identity(1, 1);
    for (char c : s) {
        const ComplexMatrix p = pauli(c);
        ComplexMatrix next(out.rows() * 2, out.cols() * 2);
        for (Index r = 0; r < out.rows(); ++r)
            for (Index col = 0; col < out.cols(); ++col) next.block(2 * r, 2 * col, 2, 2) = out(r, col) * p;
        out = next;
    }
    return out;
}

void BM_Matexp(benchmark::State& state) {
    const auto a = random_skew(state.range(0), 1);
    for (auto _ : state) benchmark::DoNotOptimize(larc::matexp(a, 0.7));
}
BENCHMARK(BM_Matexp)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_Matlog(benchmark::State& state) {
    const auto u = larc::matexp(random_skew(state.range(0), 2), 0.3);
    for (auto _ : state) benchmark::DoNotOptimize(larc::matlog_unitary(u));
}
BENCHMARK(BM_Matlog)->Arg(2)->Arg(4)->Arg(8);

// Transverse-field chains on q qubits: ZZ couplings and X fields.
void BM_LieClosureChain(benchmark::State& state) {
    const auto q = static_cast<std::size_t>(state.range(0));
    std::vector<SkewHermitianMatrix> gens;
    for (std::size_t k = 0; k + 1 < q; ++k) {
        std::string s(q, 'I');
        s[k] = s[k + 1] = 'Z';
        gens.emplace_back(Complex(0, 1) * pauli_string(s));
    }
    for (std::size_t k = 0; k < q; ++k) {
        std::string s(q, 'I');
        s[k] = 'X';
        gens.emplace_back(Complex(0, 1) * pauli_string(s));
    }
    std::size_t d = 0;
    for (auto _ : state) d = larc::lie_closure(gens).d;
    state.counters["d"] = static_cast<double>(d);
}
BENCHMARK(BM_LieClosureChain)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_Recurrence(benchmark::State& state) {
    ComplexMatrix d = ComplexMatrix::Zero(3, 3);
    d(0, 0) = Complex(0, 1);
    d(1, 1) = Complex(0, std::sqrt(2.0));
    d(2, 2) = Complex(0, std::sqrt(3.0));
    const SkewHermitianMatrix a(d);
    const double eps = std::pow(10.0, -static_cast<double>(state.range(0)) / 2.0);
    for (auto _ : state) benchmark::DoNotOptimize(larc::positive_time_recurrence(a, -1.0, eps, 100'000'000));
}
BENCHMARK(BM_Recurrence)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

larc::HamiltonianModel su2_model() {
    return larc::HamiltonianModel::polynomial(
        2, 2, {{{1, 0}, larc::HermitianMatrix(pauli('X'))}, {{0, 1}, larc::HermitianMatrix(pauli('Y'))}});
}

void BM_BuildChartSu2(benchmark::State& state) {
    const auto model = su2_model();
    const auto gens = larc::sample_generators(model, larc::ControlSet::box({-1, -1}, {1, 1}, 0),
                                              larc::RandomStrategy{});
    const auto basis = larc::lie_closure(gens);
    for (auto _ : state) benchmark::DoNotOptimize(larc::build_chart(gens, basis));
}
BENCHMARK(BM_BuildChartSu2)->Unit(benchmark::kMillisecond);

void BM_SynthesizeSu2(benchmark::State& state) {
    const auto model = su2_model();
    const auto gens = larc::sample_generators(model, larc::ControlSet::box({-1, -1}, {1, 1}, 0),
                                              larc::RandomStrategy{});
    const auto chart = larc::build_chart(gens, larc::lie_closure(gens));
    const auto target = larc::matexp(random_skew(2, 9), 1.0);
    // random_skew has a trace part; strip it so the target is in SU(2).
    const ComplexMatrix u = target.matrix() / std::sqrt(target.matrix().determinant());
    const larc::UnitaryMatrix t(u);
    for (auto _ : state) benchmark::DoNotOptimize(larc::synthesize(model, chart, t));
}
BENCHMARK(BM_SynthesizeSu2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
