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

// Random reachable points and how well they cover e^L.

#pragma once

#include "larc/closure.hpp"
#include "larc/matrix.hpp"
#include "larc/model.hpp"
#include "larc/program.hpp"

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace larc {

struct CoveringStats {
    double min = 0.0;
    double mean = 0.0;
    double max = 0.0;  // covering radius over the probes
    std::size_t samples = 0;
    std::size_t probes = 0;
};

struct DensityOptions {
    std::size_t max_segments = 16;
    std::size_t probes = 100;
};

// One random program: 1..max_segments segments, controls drawn from the
// control set, durations uniform in [0, horizon].
ControlProgram random_program(const ControlSet& controls, double horizon, std::size_t max_segments,
                              std::mt19937_64& rng);

std::vector<UnitaryMatrix> random_endpoints(const HamiltonianModel& model, const ControlSet& controls,
                                            std::size_t count, double horizon, std::uint64_t seed,
                                            std::size_t max_segments = 16);

// exp(X), X = sum_k c_k E_k with c_k uniform in [-pi, pi].
std::vector<UnitaryMatrix> probe_targets(const LieBasis& basis, std::size_t count, std::uint64_t seed);

// For every probe, the Frobenius distance to its nearest sample.
CoveringStats covering_statistics(std::span<const UnitaryMatrix> samples,
                                  std::span<const UnitaryMatrix> probes);

// Probes are drawn with probe_targets(basis, probes, seed ^ 0x5851f42d4c957f2d).
CoveringStats density_sampler(const HamiltonianModel& model, const ControlSet& controls,
                              const LieBasis& basis, std::size_t n_samples, double horizon,
                              std::uint64_t seed, const DensityOptions& options = {});

io::Json covering_to_json(const CoveringStats& stats);

}  // namespace larc
