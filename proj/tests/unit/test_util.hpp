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

#pragma once

#include "larc/closure.hpp"
#include "larc/matrix.hpp"
#include "larc/model.hpp"

#include <Eigen/QR>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

namespace larc::testing {

inline ComplexMatrix sigma_x() {
    ComplexMatrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

inline ComplexMatrix sigma_y() {
    ComplexMatrix m(2, 2);
    m << 0, Complex(0, -1), Complex(0, 1), 0;
    return m;
}

inline ComplexMatrix sigma_z() {
    ComplexMatrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

inline ComplexMatrix id2() { return ComplexMatrix::Identity(2, 2); }

inline constexpr Complex I{0.0, 1.0};

inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (Index r = 0; r < a.rows(); ++r)
        for (Index c = 0; c < a.cols(); ++c) k.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
    return k;
}

inline SkewHermitianMatrix skew(const ComplexMatrix& m) { return SkewHermitianMatrix(m); }

inline HermitianMatrix herm(const ComplexMatrix& m) { return HermitianMatrix(m); }

inline SkewHermitianMatrix random_skew(Index n, std::mt19937_64& rng, double scale = 1.0) {
    std::normal_distribution<double> g;
    ComplexMatrix m(n, n);
    for (Index r = 0; r < n; ++r)
        for (Index c = 0; c < n; ++c) m(r, c) = Complex(g(rng), g(rng));
    m = (0.5 * scale * (m - m.adjoint())).eval();
    return SkewHermitianMatrix(m);
}

// Haar-distributed unitary via QR of a Ginibre matrix with phase fix.
inline UnitaryMatrix haar_unitary(Index n, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    ComplexMatrix z(n, n);
    for (Index r = 0; r < n; ++r)
        for (Index c = 0; c < n; ++c) z(r, c) = Complex(g(rng), g(rng));
    Eigen::HouseholderQR<ComplexMatrix> qr(z);
    ComplexMatrix q = qr.householderQ();
    const ComplexMatrix rmat = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Index k = 0; k < n; ++k) {
        const Complex d = rmat(k, k);
        q.col(k) *= d / std::abs(d);
    }
    return UnitaryMatrix(q);
}

inline UnitaryMatrix haar_special_unitary(Index n, std::mt19937_64& rng) {
    auto u = haar_unitary(n, rng).matrix();
    const Complex det = u.determinant();
    u /= std::pow(det, 1.0 / static_cast<double>(n));
    return UnitaryMatrix(u);
}

// H(u1, u2) = u1 sigma_x + u2 sigma_y on the box [-1, 1]^2.
inline HamiltonianModel su2_model() {
    return HamiltonianModel::polynomial(2, 2, {{{1, 0}, herm(sigma_x())}, {{0, 1}, herm(sigma_y())}});
}

inline ControlSet su2_controls(std::uint64_t seed = 0) {
    return ControlSet::box({-1.0, -1.0}, {1.0, 1.0}, seed);
}

// H(u) = u sigma_z on [0, 1].
inline HamiltonianModel abelian_model() {
    return HamiltonianModel::polynomial(2, 1, {{{1}, herm(sigma_z())}});
}

inline ControlSet abelian_controls(std::uint64_t seed = 0) { return ControlSet::box({0.0}, {1.0}, seed); }

// H(u) = u sigma_x + u^2 sigma_y.
inline HamiltonianModel nonbilinear_model() {
    return HamiltonianModel::polynomial(2, 1, {{{1}, herm(sigma_x())}, {{2}, herm(sigma_y())}});
}

}  // namespace larc::testing
