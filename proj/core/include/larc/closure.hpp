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

// Lie closure of a generating set inside u(n) and the controllability verdict.

#pragma once

#include "larc/matrix.hpp"
#include "larc/matrix_io.hpp"
#include "larc/model.hpp"

#include <string>
#include <vector>

namespace larc {

// Orthonormal real basis of a Lie subalgebra of u(n).
struct LieBasis {
    Index n = 0;
    std::size_t d = 0;
    std::vector<SkewHermitianMatrix> elements;
    int bracket_depth = 0;
    // Largest residual of [E_i, E_j] outside the span, measured at termination.
    double closure_residual = 0.0;
    double closure_tol = 1e-9;
};

enum class VerdictKind { FullUnitary, SpecialUnitary, ProperSubalgebra };

struct ControllabilityVerdict {
    VerdictKind kind = VerdictKind::ProperSubalgebra;
    std::size_t d = 0;
    std::string reachable_set_description;
};

const char* verdict_name(VerdictKind kind);

// AB - BA.
SkewHermitianMatrix bracket(const SkewHermitianMatrix& a, const SkewHermitianMatrix& b);

struct ClosureOptions {
    double closure_tol = 1e-9;
    std::size_t max_dim = 0;  // 0 means n^2
};

// Breadth-first closure. Each sweep brackets the newest layer against every
// basis element and keeps brackets with relative residual above closure_tol.
LieBasis lie_closure(const GeneratorSet& gens, const ClosureOptions& options = {});
LieBasis lie_closure(const std::vector<SkewHermitianMatrix>& generators,
                     const ClosureOptions& options = {});

ControllabilityVerdict classify(const LieBasis& basis);

struct Projection {
    RealVector coordinates;
    double residual = 0.0;
};

Projection project_to_algebra(const LieBasis& basis, const ComplexMatrix& m);

// Sum_k coordinates_k E_k.
SkewHermitianMatrix algebra_element(const LieBasis& basis, const RealVector& coordinates);

io::Json closure_report(const LieBasis& basis, const ControllabilityVerdict& verdict);

}  // namespace larc
