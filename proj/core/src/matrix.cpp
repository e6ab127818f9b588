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

#include "larc/matrix.hpp"

#include "larc/errors.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace larc {

namespace {

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionMismatch(std::string(what) + ": dimension mismatch (" +
                                std::to_string(a.rows()) + " vs " + std::to_string(b.rows()) + ")");
    }
}

ComplexMatrix diag_conjugate(const ComplexMatrix& v, const Eigen::VectorXcd& d) {
    return v * d.asDiagonal() * v.adjoint();
}

}  // namespace

void require_square_finite(const ComplexMatrix& m, const char* what) {
    if (m.rows() == 0 || m.rows() != m.cols()) {
        throw InvalidArgument(std::string(what) + ": matrix must be square and non-empty");
    }
    if (m.rows() > kMaxDimension) {
        throw InvalidArgument(std::string(what) + ": dimension exceeds " +
                              std::to_string(kMaxDimension));
    }
    if (!m.allFinite()) {
        throw InvalidArgument(std::string(what) + ": non-finite entry");
    }
}

HermitianMatrix::HermitianMatrix(ComplexMatrix m, double tol) : m_(std::move(m)) {
    require_square_finite(m_, "HermitianMatrix");
    const double defect = (m_ - m_.adjoint()).norm();
    if (defect > tol * std::max(1.0, m_.norm())) {
        throw InvalidArgument("HermitianMatrix: ||H - H^H||_F = " + format_number(defect));
    }
}

SkewHermitianMatrix::SkewHermitianMatrix(ComplexMatrix m, double tol) : m_(std::move(m)) {
    require_square_finite(m_, "SkewHermitianMatrix");
    const double defect = (m_ + m_.adjoint()).norm();
    if (defect > tol * std::max(1.0, m_.norm())) {
        throw InvalidArgument("SkewHermitianMatrix: ||A + A^H||_F = " + format_number(defect));
    }
}

SkewHermitianMatrix SkewHermitianMatrix::zero(Index n) {
    return SkewHermitianMatrix(ComplexMatrix::Zero(n, n), Unchecked{});
}

SkewHermitianMatrix SkewHermitianMatrix::from_hamiltonian(const HermitianMatrix& h) {
    const ComplexMatrix a = Complex(0.0, -1.0) * h.matrix();
    return SkewHermitianMatrix(0.5 * (a - a.adjoint()), Unchecked{});
}

SkewHermitianMatrix SkewHermitianMatrix::scaled(double s) const {
    return SkewHermitianMatrix(s * m_, Unchecked{});
}

UnitaryMatrix::UnitaryMatrix(ComplexMatrix m, const MatrixTolerances& tol) : m_(std::move(m)) {
    require_square_finite(m_, "UnitaryMatrix");
    const auto n = static_cast<double>(m_.rows());
    const ComplexMatrix id = ComplexMatrix::Identity(m_.rows(), m_.cols());
    const double defect = (m_.adjoint() * m_ - id).norm();
    if (defect <= tol.unitary * n) return;
    if (defect <= tol.unitary_repair) {
        m_ = polar_project(m_).matrix();
        return;
    }
    throw InvalidArgument("UnitaryMatrix: ||U^H U - I||_F = " + format_number(defect));
}

UnitaryMatrix UnitaryMatrix::identity(Index n) {
    return UnitaryMatrix(ComplexMatrix::Identity(n, n), Unchecked{});
}

UnitaryMatrix UnitaryMatrix::unchecked(ComplexMatrix m) {
    return UnitaryMatrix(std::move(m), Unchecked{});
}

UnitaryMatrix UnitaryMatrix::adjoint() const {
    return UnitaryMatrix(m_.adjoint(), Unchecked{});
}

UnitaryMatrix UnitaryMatrix::operator*(const UnitaryMatrix& rhs) const {
    require_same_dim(m_, rhs.m_, "UnitaryMatrix::operator*");
    return UnitaryMatrix(m_ * rhs.m_, Unchecked{});
}

SkewEigenDecomposition skew_eigen(const SkewHermitianMatrix& a) {
    // -iA is Hermitian with eigenvalues theta_k.
    const ComplexMatrix h = Complex(0.0, -1.0) * a.matrix();
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(0.5 * (h + h.adjoint()));
    if (solver.info() != Eigen::Success) {
        throw EigenFailure("skew_eigen: self-adjoint eigensolver did not converge");
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

UnitaryEigenDecomposition unitary_eigen(const UnitaryMatrix& u) {
    // A normal matrix has a diagonal Schur form; Q is unitary even when
    // eigenvalues are degenerate.
    Eigen::ComplexSchur<ComplexMatrix> schur(u.matrix());
    if (schur.info() != Eigen::Success) {
        throw EigenFailure("unitary_eigen: Schur decomposition did not converge");
    }
    const ComplexMatrix& t = schur.matrixT();
    RealVector phases(t.rows());
    for (Index k = 0; k < t.rows(); ++k) {
        double phi = std::arg(t(k, k));
        if (phi <= -std::numbers::pi) phi = std::numbers::pi;
        phases(k) = phi;
    }
    return {std::move(phases), schur.matrixU()};
}

RealVector eigenphases(const SkewHermitianMatrix& a) {
    return skew_eigen(a).phases;
}

UnitaryMatrix matexp(const SkewHermitianMatrix& a, double t) {
    const auto eig = skew_eigen(a);
    Eigen::VectorXcd d(eig.phases.size());
    for (Index k = 0; k < d.size(); ++k) {
        d(k) = std::polar(1.0, eig.phases(k) * t);
    }
    return polar_project(diag_conjugate(eig.vectors, d));
}

SkewHermitianMatrix matlog_unitary(const UnitaryMatrix& u, double branch_tol) {
    const auto eig = unitary_eigen(u);
    Eigen::VectorXcd d(eig.phases.size());
    for (Index k = 0; k < d.size(); ++k) {
        const double phi = eig.phases(k);
        if (std::numbers::pi - std::abs(phi) < branch_tol) {
            throw BranchCut("matlog_unitary: eigenvalue within " + format_number(branch_tol) +
                            " rad of -1");
        }
        d(k) = Complex(0.0, phi);
    }
    const ComplexMatrix l = diag_conjugate(eig.vectors, d);
    return SkewHermitianMatrix(0.5 * (l - l.adjoint()));
}

UnitaryMatrix principal_sqrt(const UnitaryMatrix& u) {
    const auto eig = unitary_eigen(u);
    Eigen::VectorXcd d(eig.phases.size());
    for (Index k = 0; k < d.size(); ++k) {
        d(k) = std::polar(1.0, 0.5 * eig.phases(k));
    }
    return polar_project(diag_conjugate(eig.vectors, d));
}

UnitaryMatrix polar_project(const ComplexMatrix& m) {
    // Nearly unitary input: one Newton-Schulz step X (3 I - X^H X) / 2 reaches
    // the polar factor to roundoff.
    const ComplexMatrix g = m.adjoint() * m;
    const ComplexMatrix eye = ComplexMatrix::Identity(m.cols(), m.cols());
    if (m.rows() == m.cols() && (g - eye).norm() <= 1e-8) {
        return UnitaryMatrix::unchecked(m * (1.5 * eye - 0.5 * g));
    }
    Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    return UnitaryMatrix::unchecked(svd.matrixU() * svd.matrixV().adjoint());
}

double frobenius_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "frobenius_inner");
    double acc = 0.0;
    const Index size = a.size();
    const Complex* pa = a.data();
    const Complex* pb = b.data();
    for (Index k = 0; k < size; ++k) {
        acc += pa[k].real() * pb[k].real() + pa[k].imag() * pb[k].imag();
    }
    return acc;
}

double frobenius_norm(const ComplexMatrix& a) {
    return a.norm();
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "frobenius_distance");
    return (a - b).norm();
}

UnitaryAccumulator::UnitaryAccumulator(Index n) : value_(ComplexMatrix::Identity(n, n)) {}

UnitaryAccumulator::UnitaryAccumulator(UnitaryMatrix start) : value_(start.matrix()) {}

void UnitaryAccumulator::left_multiply(const ComplexMatrix& factor) {
    value_ = factor * value_;
    count_factor();
}

void UnitaryAccumulator::right_multiply(const ComplexMatrix& factor) {
    value_ = value_ * factor;
    count_factor();
}

void UnitaryAccumulator::count_factor() {
    if (++since_projection_ >= kReprojectEvery) {
        value_ = polar_project(value_).matrix();
        since_projection_ = 0;
    }
}

UnitaryMatrix UnitaryAccumulator::value() const {
    return UnitaryMatrix::unchecked(value_);
}

OrthonormalSpan::OrthonormalSpan(Index n) : n_(n) {}

ComplexMatrix OrthonormalSpan::orthogonal_residual(const ComplexMatrix& m) const {
    require_same_dim(m, ComplexMatrix(n_, n_), "OrthonormalSpan");
    ComplexMatrix r = m;
    for (int pass = 0; pass < 2; ++pass) {
        for (const auto& e : basis_) {
            r -= frobenius_inner(e, r) * e;
        }
    }
    return r;
}

double OrthonormalSpan::residual_norm(const ComplexMatrix& m) const {
    return orthogonal_residual(m).norm();
}

RealVector OrthonormalSpan::coordinates(const ComplexMatrix& m) const {
    RealVector c(static_cast<Index>(basis_.size()));
    for (std::size_t k = 0; k < basis_.size(); ++k) {
        c(static_cast<Index>(k)) = frobenius_inner(basis_[k], m);
    }
    return c;
}

bool OrthonormalSpan::add_if_independent(const ComplexMatrix& m, double rel_tol,
                                         double norm_floor) {
    const double norm = m.norm();
    if (norm == 0.0 || basis_.size() >= static_cast<std::size_t>(2 * n_ * n_)) return false;
    ComplexMatrix r = orthogonal_residual(m);
    const double rn = r.norm();
    if (rn <= rel_tol * std::max(norm, norm_floor)) return false;
    basis_.push_back(r / rn);
    return true;
}

double gram_min_eigenvalue(const std::vector<ComplexMatrix>& ms) {
    if (ms.empty()) return 0.0;
    const auto k = static_cast<Index>(ms.size());
    RealMatrix g(k, k);
    for (Index i = 0; i < k; ++i) {
        for (Index j = i; j < k; ++j) {
            g(i, j) = g(j, i) = frobenius_inner(ms[static_cast<std::size_t>(i)],
                                                ms[static_cast<std::size_t>(j)]);
        }
    }
    Eigen::SelfAdjointEigenSolver<RealMatrix> solver(g, Eigen::EigenvaluesOnly);
    return solver.eigenvalues()(0);
}

}  // namespace larc
