// Copyright 2026 The qotto Authors
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

#include "qotto/qmat.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace qotto {

namespace {

constexpr Complex kI{0.0, 1.0};

// Eigenvalues of a density matrix that are slightly negative from round-off
// are treated as zero before taking logarithms.
constexpr double kEigenClamp = 1e-9;

// A state's weight on the kernel of the reference state above this value
// makes the relative entropy divergent.
constexpr double kSupportTol = 1e-12;

// Spectral exponentials are rejected above this eigenvector condition number.
constexpr double kMaxSpectralCondition = 1e8;

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    std::ostringstream os;
    os << what << ": expected a non-empty square matrix, got " << m.rows()
       << "x" << m.cols();
    throw DimensionError(os.str());
  }
}

double clamp_eigenvalue(double v) {
  if (v >= 0.0) return v;
  if (v >= -kEigenClamp) return 0.0;
  std::ostringstream os;
  os << "density matrix eigenvalue " << v << " is below -" << kEigenClamp;
  throw InvariantError(os.str());
}

// sum_i -p ln p with 0 ln 0 = 0.
double shannon(const RealVector& p) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    const double v = clamp_eigenvalue(p(i));
    if (v > 0.0) s -= v * std::log(v);
  }
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------

HermitianOperator::HermitianOperator(ComplexMatrix m) : m_(std::move(m)) {
  require_square(m_, "HermitianOperator");
  const double scale = std::max(1.0, max_abs(m_));
  const double asym = max_abs(m_ - m_.adjoint());
  if (asym > kHermitianOperatorTol * scale) {
    std::ostringstream os;
    os << "HermitianOperator: |H - H^dagger| = " << asym << " exceeds "
       << kHermitianOperatorTol << " * " << scale;
    throw InvariantError(os.str());
  }
}

HermitianOperator HermitianOperator::operator+(
    const HermitianOperator& other) const {
  if (other.dim() != dim()) {
    throw DimensionError("HermitianOperator::operator+: dimension mismatch");
  }
  return HermitianOperator(m_ + other.m_);
}

HermitianOperator HermitianOperator::operator*(double s) const {
  return HermitianOperator(m_ * s);
}

DensityMatrix::DensityMatrix(ComplexMatrix m, const DensityTolerances& tol)
    : m_(std::move(m)) {
  require_square(m_, "DensityMatrix");
  if (m_.rows() != 2 && m_.rows() != 4) {
    throw DimensionError("DensityMatrix: dimension must be 2 or 4, got " +
                         std::to_string(m_.rows()));
  }
  const double asym = max_abs(m_ - m_.adjoint());
  if (!(asym <= tol.hermitian)) {
    std::ostringstream os;
    os << "DensityMatrix: not Hermitian (|rho - rho^dagger| = " << asym << ")";
    throw InvariantError(os.str());
  }
  m_ = (0.5 * (m_ + m_.adjoint())).eval();
  const Complex tr = m_.trace();
  if (!(std::abs(tr - 1.0) <= tol.trace)) {
    std::ostringstream os;
    os << "DensityMatrix: trace " << tr.real() << " differs from 1";
    throw InvariantError(os.str());
  }
  const double min_eig = eigenvalues().minCoeff();
  if (!(min_eig >= -tol.positivity)) {
    std::ostringstream os;
    os << "DensityMatrix: minimum eigenvalue " << min_eig
       << " below -" << tol.positivity;
    throw InvariantError(os.str());
  }
}

DensityMatrix DensityMatrix::pure(const ComplexVector& psi) {
  const double n = psi.norm();
  if (std::abs(n - 1.0) > 1e-10) {
    throw InvariantError("DensityMatrix::pure: ket is not normalised");
  }
  return DensityMatrix(psi * psi.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(Eigen::Index dim) {
  return DensityMatrix(identity(dim) / static_cast<double>(dim));
}

DensityMatrix DensityMatrix::diagonal(const RealVector& populations) {
  return DensityMatrix(populations.cast<Complex>().asDiagonal().toDenseMatrix());
}

RealVector DensityMatrix::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m_, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

// ---------------------------------------------------------------------------

ComplexMatrix identity(Eigen::Index dim) {
  return ComplexMatrix::Identity(dim, dim);
}

ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

ComplexMatrix pauli_y() {
  ComplexMatrix m(2, 2);
  m << 0.0, -kI, kI, 0.0;
  return m;
}

ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

ComplexMatrix sigma_plus() {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 1) = 1.0;
  return m;
}

ComplexMatrix sigma_minus() {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(1, 0) = 1.0;
  return m;
}

ComplexVector basis_ket(Eigen::Index dim, Eigen::Index index) {
  ComplexVector v = ComplexVector::Zero(dim);
  v(index) = 1.0;
  return v;
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep) {
  if (rho.dim() != 4) {
    throw DimensionError("partial_trace: expected a two-qubit (4x4) state");
  }
  const ComplexMatrix& m = rho.matrix();
  ComplexMatrix out = ComplexMatrix::Zero(2, 2);
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      for (int k = 0; k < 2; ++k) {
        out(x, y) += keep == Subsystem::S ? m(2 * x + k, 2 * y + k)
                                          : m(2 * k + x, 2 * k + y);
      }
    }
  }
  return DensityMatrix(std::move(out));
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw DimensionError("trace_distance: dimension mismatch");
  }
  const ComplexMatrix diff = rho.matrix() - sigma.matrix();
  double norm1 = 0.0;
  if (diff.rows() == 2) {
    // Eigenvalues m +- s of a 2x2 Hermitian matrix; |m+s| + |m-s| = 2 max(|m|, s).
    const double a = diff(0, 0).real();
    const double d = diff(1, 1).real();
    const double mean = 0.5 * (a + d);
    const double s = std::hypot(0.5 * (a - d), std::abs(diff(0, 1)));
    norm1 = 2.0 * std::max(std::abs(mean), s);
  } else {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(diff,
                                                    Eigen::EigenvaluesOnly);
    norm1 = es.eigenvalues().cwiseAbs().sum();
  }
  return std::clamp(0.5 * norm1, 0.0, 1.0);
}

double von_neumann_entropy(const DensityMatrix& rho) {
  return shannon(rho.eigenvalues());
}

double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw DimensionError("relative_entropy: dimension mismatch");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(sigma.matrix());
  const RealVector& s = es.eigenvalues();
  const ComplexMatrix& v = es.eigenvectors();

  double cross = 0.0;  // Tr[rho ln sigma]
  for (Eigen::Index j = 0; j < s.size(); ++j) {
    const double sj = clamp_eigenvalue(s(j));
    const double weight = (v.col(j).adjoint() * rho.matrix() * v.col(j))(0, 0).real();
    if (sj == 0.0) {
      if (weight > kSupportTol) {
        std::ostringstream os;
        os << "relative_entropy: weight " << weight
           << " outside the support of the reference state";
        throw DivergentRelativeEntropy(os.str());
      }
      continue;
    }
    cross += weight * std::log(sj);
  }
  const double d = -von_neumann_entropy(rho) - cross;
  // Klein's inequality holds exactly; anything below zero is round-off.
  return std::max(d, 0.0);
}

DensityMatrix gibbs_state(const HermitianOperator& h, double beta) {
  if (!std::isfinite(beta) || beta < 0.0) {
    throw std::invalid_argument("gibbs_state: beta must be finite and >= 0");
  }
  const Eigen::Index n = h.dim();
  if (beta == 0.0) return DensityMatrix(identity(n) / static_cast<double>(n));

  const EigenDecomposition eig = hermitian_eig(h);
  const double e_min = eig.values.minCoeff();
  RealVector p(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    p(i) = std::exp(-beta * (eig.values(i) - e_min));
  }
  p /= p.sum();
  ComplexMatrix rho =
      eig.vectors * p.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
  return DensityMatrix(std::move(rho));
}

EigenDecomposition hermitian_eig(const HermitianOperator& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h.matrix());
  if (es.info() != Eigen::Success) {
    throw NumericalError("hermitian_eig: eigensolver did not converge");
  }
  return {es.eigenvalues(), es.eigenvectors()};
}

ComplexMatrix matrix_exp_hermitian_prop(const HermitianOperator& h, double t) {
  const EigenDecomposition eig = hermitian_eig(h);
  ComplexVector phases(eig.values.size());
  for (Eigen::Index i = 0; i < phases.size(); ++i) {
    phases(i) = std::exp(-kI * eig.values(i) * t);
  }
  return eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
}

SpectralExponential::SpectralExponential(const ComplexMatrix& m) {
  require_square(m, "SpectralExponential");
  Eigen::ComplexEigenSolver<ComplexMatrix> es(m);
  if (es.info() != Eigen::Success) {
    throw NumericalError("SpectralExponential: eigensolver failed");
  }
  lambda_ = es.eigenvalues();
  v_ = es.eigenvectors();
  Eigen::JacobiSVD<ComplexMatrix> svd(v_);
  const RealVector& sv = svd.singularValues();
  cond_ = sv(0) / sv(sv.size() - 1);
  if (!(cond_ < kMaxSpectralCondition)) {
    std::ostringstream os;
    os << "SpectralExponential: eigenvector condition number " << cond_
       << " too large for a spectral exponential";
    throw NumericalError(os.str());
  }
  v_inv_ = v_.partialPivLu().inverse();
}

ComplexMatrix SpectralExponential::exp(double t) const {
  if (t == 0.0) return identity(v_.rows());
  ComplexVector growth(lambda_.size());
  for (Eigen::Index i = 0; i < growth.size(); ++i) {
    growth(i) = std::exp(lambda_(i) * t);
  }
  return v_ * growth.asDiagonal() * v_inv_;
}

ComplexMatrix matrix_exp_diagonalizable(const ComplexMatrix& m, double t) {
  return SpectralExponential(m).exp(t);
}

double expectation(const DensityMatrix& rho, const HermitianOperator& h) {
  if (rho.dim() != h.dim()) {
    throw DimensionError("expectation: dimension mismatch");
  }
  return (rho.matrix() * h.matrix()).trace().real();
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("max_abs_diff: shape mismatch");
  }
  return max_abs(a - b);
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return max_abs(a - b) <= tol;
}

}  // namespace qotto
