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

// Dense complex-matrix kernels and the real Frobenius geometry on u(n).
//
// Every group element handled by the library lives in U(n) and every algebra
// element in u(n) = {A : A + A^H = 0}. The wrappers below check those
// invariants once at construction so that downstream code can rely on them.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <vector>

namespace larc {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;
using Index = Eigen::Index;

inline constexpr Index kMaxDimension = 64;

// Default numerical tolerances. Each one can be overridden per call.
struct MatrixTolerances {
    double unitary = 1e-10;         // ||U^H U - I||_F <= unitary * n
    double unitary_repair = 1e-6;   // polar re-projection allowed below this
    double skew_hermitian = 1e-12;  // relative to max(1, ||A||_F)
    double hermitian = 1e-12;       // relative to max(1, ||H||_F)
    double branch_cut = 1e-8;       // angular distance of an eigenvalue to -1
};

inline constexpr MatrixTolerances kDefaultTolerances{};

// Square matrix with finite entries; throws InvalidArgument otherwise.
void require_square_finite(const ComplexMatrix& m, const char* what);

class HermitianMatrix {
public:
    explicit HermitianMatrix(ComplexMatrix m,
                             double tol = kDefaultTolerances.hermitian);

    const ComplexMatrix& matrix() const noexcept { return m_; }
    Index dim() const noexcept { return m_.rows(); }

private:
    ComplexMatrix m_;
};

class SkewHermitianMatrix {
public:
    explicit SkewHermitianMatrix(ComplexMatrix m,
                                 double tol = kDefaultTolerances.skew_hermitian);

    static SkewHermitianMatrix zero(Index n);
    // -i H, the dynamical generator of a Hamiltonian.
    static SkewHermitianMatrix from_hamiltonian(const HermitianMatrix& h);

    const ComplexMatrix& matrix() const noexcept { return m_; }
    Index dim() const noexcept { return m_.rows(); }

    SkewHermitianMatrix scaled(double s) const;

private:
    struct Unchecked {};
    SkewHermitianMatrix(ComplexMatrix m, Unchecked) : m_(std::move(m)) {}

    ComplexMatrix m_;
};

class UnitaryMatrix {
public:
    // Validates unitarity; re-projects onto U(n) when the defect is small.
    explicit UnitaryMatrix(ComplexMatrix m,
                           const MatrixTolerances& tol = kDefaultTolerances);

    static UnitaryMatrix identity(Index n);
    // Caller guarantees unitarity to working precision (products, exponentials).
    static UnitaryMatrix unchecked(ComplexMatrix m);

    const ComplexMatrix& matrix() const noexcept { return m_; }
    Index dim() const noexcept { return m_.rows(); }

    UnitaryMatrix adjoint() const;
    UnitaryMatrix operator*(const UnitaryMatrix& rhs) const;

private:
    struct Unchecked {};
    UnitaryMatrix(ComplexMatrix m, Unchecked) : m_(std::move(m)) {}

    ComplexMatrix m_;
};

// A = V diag(i * phases) V^H with V unitary.
struct SkewEigenDecomposition {
    RealVector phases;
    ComplexMatrix vectors;
};

// U = V diag(exp(i * phases)) V^H, phases in (-pi, pi].
struct UnitaryEigenDecomposition {
    RealVector phases;
    ComplexMatrix vectors;
};

SkewEigenDecomposition skew_eigen(const SkewHermitianMatrix& a);
UnitaryEigenDecomposition unitary_eigen(const UnitaryMatrix& u);

// Eigenphases theta_k of A = V diag(i theta_k) V^H.
RealVector eigenphases(const SkewHermitianMatrix& a);

UnitaryMatrix matexp(const SkewHermitianMatrix& a, double t);

// Principal logarithm. Throws BranchCut if an eigenvalue is within
// `branch_tol` radians of -1.
SkewHermitianMatrix matlog_unitary(const UnitaryMatrix& u,
                                   double branch_tol = kDefaultTolerances.branch_cut);

// Principal square root: eigenphases in (-pi, pi] halved.
UnitaryMatrix principal_sqrt(const UnitaryMatrix& u);

// U (U^H U)^{-1/2}, computed from the SVD as W Z^H.
UnitaryMatrix polar_project(const ComplexMatrix& m);

// Re tr(A^H B).
double frobenius_inner(const ComplexMatrix& a, const ComplexMatrix& b);
double frobenius_norm(const ComplexMatrix& a);
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);

// Left-multiplying product chain with periodic polar re-projection.
class UnitaryAccumulator {
public:
    static constexpr int kReprojectEvery = 32;

    explicit UnitaryAccumulator(Index n);
    explicit UnitaryAccumulator(UnitaryMatrix start);

    void left_multiply(const ComplexMatrix& factor);
    void right_multiply(const ComplexMatrix& factor);

    UnitaryMatrix value() const;

private:
    void count_factor();

    ComplexMatrix value_;
    int since_projection_ = 0;
};

// Incrementally built orthonormal basis of a real subspace of the n x n
// complex matrices under frobenius_inner. Modified Gram-Schmidt with one
// re-orthogonalization pass.
class OrthonormalSpan {
public:
    explicit OrthonormalSpan(Index n);

    Index matrix_dim() const noexcept { return n_; }
    std::size_t size() const noexcept { return basis_.size(); }
    const std::vector<ComplexMatrix>& basis() const noexcept { return basis_; }

    // Component of `m` orthogonal to the span.
    ComplexMatrix orthogonal_residual(const ComplexMatrix& m) const;
    double residual_norm(const ComplexMatrix& m) const;
    RealVector coordinates(const ComplexMatrix& m) const;

    // Adds the normalized residual of `m` when its norm exceeds
    // rel_tol * max(||m||_F, norm_floor). Returns whether the span grew.
    bool add_if_independent(const ComplexMatrix& m, double rel_tol, double norm_floor = 0.0);

private:
    Index n_;
    std::vector<ComplexMatrix> basis_;
};

// Smallest eigenvalue of the real Gram matrix G_ij = frobenius_inner(m_i, m_j).
double gram_min_eigenvalue(const std::vector<ComplexMatrix>& ms);

}  // namespace larc
