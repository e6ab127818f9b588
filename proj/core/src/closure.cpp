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

#include <algorithm>
#include <cmath>
#include <complex>

namespace larc {

const char* verdict_name(VerdictKind kind) {
    switch (kind) {
        case VerdictKind::FullUnitary: return "full_unitary";
        case VerdictKind::SpecialUnitary: return "special_unitary";
        case VerdictKind::ProperSubalgebra: return "proper_subalgebra";
    }
    return "unknown";
}

SkewHermitianMatrix bracket(const SkewHermitianMatrix& a, const SkewHermitianMatrix& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("bracket: dimension mismatch");
    const ComplexMatrix c = a.matrix() * b.matrix() - b.matrix() * a.matrix();
    return SkewHermitianMatrix(0.5 * (c - c.adjoint()));
}

LieBasis lie_closure(const std::vector<SkewHermitianMatrix>& generators,
                     const ClosureOptions& options) {
    if (generators.empty()) throw InvalidArgument("lie_closure: empty generating set");
    const Index n = generators.front().dim();
    const std::size_t max_dim = options.max_dim == 0 ? static_cast<std::size_t>(n * n)
                                                     : options.max_dim;
    OrthonormalSpan span(n);
    for (const auto& g : generators) {
        if (g.dim() != n) throw DimensionMismatch("lie_closure: generator dimension mismatch");
        if (span.size() < max_dim) span.add_if_independent(g.matrix(), options.closure_tol);
    }
    if (span.size() == 0) throw InvalidArgument("lie_closure: generators span {0}");

    LieBasis basis;
    basis.n = n;
    basis.closure_tol = options.closure_tol;

    std::size_t layer_begin = 0;
    std::size_t layer_end = span.size();
    while (layer_begin < layer_end && span.size() < max_dim) {
        const std::size_t sweep_size = span.size();
        for (std::size_t i = layer_begin; i < layer_end && span.size() < max_dim; ++i) {
            for (std::size_t j = 0; j < sweep_size && span.size() < max_dim; ++j) {
                if (j >= layer_begin && j <= i) continue;  // [E,E] = 0 and each layer pair once
                const auto& bi = span.basis()[i];
                const auto& bj = span.basis()[j];
                const ComplexMatrix c = bi * bj - bj * bi;
                // Basis elements have unit norm, so brackets below the tolerance are rounding.
                span.add_if_independent(c, options.closure_tol, 1.0);
            }
        }
        if (span.size() == sweep_size) break;
        ++basis.bracket_depth;
        layer_begin = layer_end;
        layer_end = span.size();
    }

    for (const auto& e : span.basis()) {
        basis.elements.emplace_back(0.5 * (e - e.adjoint()));
    }
    basis.d = basis.elements.size();

    double worst = 0.0;
    for (std::size_t i = 0; i < basis.d; ++i) {
        for (std::size_t j = i + 1; j < basis.d; ++j) {
            const auto& bi = span.basis()[i];
            const auto& bj = span.basis()[j];
            worst = std::max(worst, span.residual_norm(bi * bj - bj * bi));
        }
    }
    basis.closure_residual = worst;
    return basis;
}

LieBasis lie_closure(const GeneratorSet& gens, const ClosureOptions& options) {
    if (gens.span_dimension == 0 || gens.generators.empty()) {
        throw InvalidArgument("lie_closure: generator set has span dimension 0");
    }
    return lie_closure(gens.generators, options);
}

ControllabilityVerdict classify(const LieBasis& basis) {
    ControllabilityVerdict v;
    v.d = basis.d;
    const auto n2 = static_cast<std::size_t>(basis.n * basis.n);
    const bool traceless = std::all_of(basis.elements.begin(), basis.elements.end(),
                                       [](const SkewHermitianMatrix& e) {
                                           return std::abs(e.matrix().trace()) <= 1e-10;
                                       });
    const std::string n = std::to_string(basis.n);
    const std::string prefix = "reachable set = e^L, dim L = " + std::to_string(basis.d);
    if (basis.d == n2) {
        v.kind = VerdictKind::FullUnitary;
        v.reachable_set_description = prefix + "; e^L = U(" + n + "), the system is controllable";
    } else if (basis.d + 1 == n2 && traceless) {
        v.kind = VerdictKind::SpecialUnitary;
        v.reachable_set_description =
            prefix + "; e^L = SU(" + n + "), the system is controllable up to a global phase";
    } else {
        v.kind = VerdictKind::ProperSubalgebra;
        v.reachable_set_description =
            prefix + "; e^L is a proper connected subgroup of U(" + n + ")";
    }
    return v;
}

Projection project_to_algebra(const LieBasis& basis, const ComplexMatrix& m) {
    if (m.rows() != basis.n || m.cols() != basis.n) {
        throw DimensionMismatch("project_to_algebra: dimension mismatch");
    }
    Projection p;
    p.coordinates.resize(static_cast<Index>(basis.d));
    ComplexMatrix r = m;
    for (std::size_t k = 0; k < basis.d; ++k) {
        const auto& e = basis.elements[k].matrix();
        const double c = frobenius_inner(e, m);
        p.coordinates(static_cast<Index>(k)) = c;
        r -= c * e;
    }
    p.residual = r.norm();
    return p;
}

SkewHermitianMatrix algebra_element(const LieBasis& basis, const RealVector& coordinates) {
    if (coordinates.size() != static_cast<Index>(basis.d)) {
        throw DimensionMismatch("algebra_element: coordinate length != d");
    }
    ComplexMatrix m = ComplexMatrix::Zero(basis.n, basis.n);
    for (std::size_t k = 0; k < basis.d; ++k) {
        m += coordinates(static_cast<Index>(k)) * basis.elements[k].matrix();
    }
    return SkewHermitianMatrix(0.5 * (m - m.adjoint()));
}

io::Json closure_report(const LieBasis& basis, const ControllabilityVerdict& verdict) {
    io::Json out = io::Json::object();
    out["d"] = basis.d;
    out["verdict"] = verdict_name(verdict.kind);
    out["closure_residual"] = basis.closure_residual;
    out["bracket_depth"] = basis.bracket_depth;
    io::Json elems = io::Json::array();
    for (const auto& e : basis.elements) elems.push_back(io::matrix_to_json(e.matrix()));
    out["basis"] = std::move(elems);
    return out;
}

}  // namespace larc
