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

#include "larc/density.hpp"

#include "larc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace larc {

ControlProgram random_program(const ControlSet& controls, double horizon, std::size_t max_segments,
                              std::mt19937_64& rng) {
    if (max_segments < 1) throw InvalidArgument("random_program: max_segments must be >= 1");
    if (!(horizon >= 0.0)) throw InvalidArgument("random_program: horizon must be >= 0");
    std::uniform_int_distribution<std::size_t> count(1, max_segments);
    std::uniform_real_distribution<double> duration(0.0, horizon);
    ControlProgram program;
    const std::size_t k = count(rng);
    for (std::size_t i = 0; i < k; ++i) {
        ControlVector u;
        if (controls.is_box()) {
            const auto& b = controls.as_box();
            u.resize(b.lower.size());
            for (std::size_t c = 0; c < u.size(); ++c) {
                u[c] = std::uniform_real_distribution<double>(b.lower[c], b.upper[c])(rng);
            }
        } else {
            const auto& pts = controls.as_finite().points;
            u = pts[std::uniform_int_distribution<std::size_t>(0, pts.size() - 1)(rng)];
        }
        program.add(std::move(u), duration(rng));
    }
    return program;
}

std::vector<UnitaryMatrix> random_endpoints(const HamiltonianModel& model, const ControlSet& controls,
                                            std::size_t count, double horizon, std::uint64_t seed,
                                            std::size_t max_segments) {
    std::mt19937_64 rng(seed);
    std::vector<UnitaryMatrix> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(propagate_program(model, random_program(controls, horizon, max_segments, rng)));
    }
    return out;
}

std::vector<UnitaryMatrix> probe_targets(const LieBasis& basis, std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coord(-std::numbers::pi, std::numbers::pi);
    std::vector<UnitaryMatrix> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        RealVector c(static_cast<Index>(basis.d));
        for (Index k = 0; k < c.size(); ++k) c(k) = coord(rng);
        out.push_back(matexp(algebra_element(basis, c), 1.0));
    }
    return out;
}

CoveringStats covering_statistics(std::span<const UnitaryMatrix> samples,
                                  std::span<const UnitaryMatrix> probes) {
    CoveringStats stats;
    stats.samples = samples.size();
    stats.probes = probes.size();
    if (samples.empty() || probes.empty()) return stats;
    stats.min = std::numeric_limits<double>::infinity();
    double sum = 0.0;
    for (const auto& p : probes) {
        double nearest = std::numeric_limits<double>::infinity();
        for (const auto& s : samples) {
            nearest = std::min(nearest, (s.matrix() - p.matrix()).squaredNorm());
        }
        nearest = std::sqrt(nearest);
        stats.min = std::min(stats.min, nearest);
        stats.max = std::max(stats.max, nearest);
        sum += nearest;
    }
    stats.mean = sum / static_cast<double>(probes.size());
    return stats;
}

CoveringStats density_sampler(const HamiltonianModel& model, const ControlSet& controls,
                              const LieBasis& basis, std::size_t n_samples, double horizon,
                              std::uint64_t seed, const DensityOptions& options) {
    if (n_samples < 1) throw InvalidArgument("density_sampler: need at least one sample");
    const auto samples = random_endpoints(model, controls, n_samples, horizon, seed, options.max_segments);
    // Probes use seed ^ 0x5851f42d4c957f2d, a stream disjoint from the samples.
    const auto probes = probe_targets(basis, options.probes, seed ^ 0x5851f42d4c957f2dULL);
    return covering_statistics(samples, probes);
}

io::Json covering_to_json(const CoveringStats& stats) {
    io::Json out = io::Json::object();
    out["samples"] = stats.samples;
    out["probes"] = stats.probes;
    out["min"] = stats.min;
    out["mean"] = stats.mean;
    out["max"] = stats.max;
    return out;
}

}  // namespace larc
