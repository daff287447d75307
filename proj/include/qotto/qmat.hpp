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

// Dense complex linear algebra and quantum-information primitives for
// one- and two-qubit Hilbert spaces (dimension 2 and 4, plus 16 for
// superoperators).
//
// Conventions: natural units (hbar = k_B = 1), energies and temperatures
// are angular frequencies. The computational basis is {|0>, |1>} with
// sigma_z|0> = +|0>, so |0> is the excited level of (omega/2) sigma_z.
// Two-qubit states are ordered {|00>, |01>, |10>, |11>} with the refrigerant
// S as the left (most significant) factor and the auxiliary qubit A right.

#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qotto {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// ---------------------------------------------------------------------------
// Errors

/// Operand dimensions do not match what the operation requires.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A matrix failed a structural invariant (Hermiticity, trace, positivity).
class InvariantError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// D(rho||sigma) is +infinity: rho has weight outside the support of sigma.
class DivergentRelativeEntropy : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A numerical procedure lost accuracy or left its domain of validity.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Tolerances

inline constexpr double kMatrixEqualityTol = 1e-12;
inline constexpr double kHermitianOperatorTol = 1e-12;
inline constexpr double kDensityHermitianTol = 1e-10;
inline constexpr double kDensityTraceTol = 1e-10;
inline constexpr double kDensityPositivityTol = 1e-9;

// ---------------------------------------------------------------------------
// Strong types

/// Hermitian matrix in angular-frequency units. Hermiticity is checked
/// relative to the largest entry, so a 2pi*kHz-scale Hamiltonian and a unit
/// Pauli matrix are held to the same relative precision.
class HermitianOperator {
 public:
  explicit HermitianOperator(ComplexMatrix m);

  const ComplexMatrix& matrix() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }

  HermitianOperator operator+(const HermitianOperator& other) const;
  HermitianOperator operator*(double s) const;

 private:
  ComplexMatrix m_;
};

/// Tolerances accepted when wrapping a matrix as a DensityMatrix.
struct DensityTolerances {
  double hermitian = kDensityHermitianTol;
  double trace = kDensityTraceTol;
  double positivity = kDensityPositivityTol;
};

/// Hermitian, unit-trace, positive-semidefinite matrix of dimension 2 or 4.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix m, const DensityTolerances& tol = {});

  /// Wraps a normalised ket as |psi><psi|.
  static DensityMatrix pure(const ComplexVector& psi);
  /// I/dim.
  static DensityMatrix maximally_mixed(Eigen::Index dim);
  /// Diagonal state with the given populations (must sum to one).
  static DensityMatrix diagonal(const RealVector& populations);

  const ComplexMatrix& matrix() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }

  /// Eigenvalues in ascending order.
  RealVector eigenvalues() const;

 private:
  ComplexMatrix m_;
};

enum class Subsystem { S, A };

struct EigenDecomposition {
  RealVector values;      // ascending
  ComplexMatrix vectors;  // orthonormal columns, vectors.col(i) <-> values(i)
};

// ---------------------------------------------------------------------------
// Constructors for standard operators

ComplexMatrix identity(Eigen::Index dim);
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
/// |0><1|, raises the (omega/2) sigma_z qubit from ground to excited.
ComplexMatrix sigma_plus();
/// |1><0|.
ComplexMatrix sigma_minus();
/// Basis ket |index> of the given dimension.
ComplexVector basis_ket(Eigen::Index dim, Eigen::Index index);

// ---------------------------------------------------------------------------
// Operations

/// Kronecker product a (x) b.
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Reduced state of one qubit of a two-qubit state.
DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep);

/// Half the trace norm of rho - sigma.
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

/// -Tr[rho ln rho] in nats.
double von_neumann_entropy(const DensityMatrix& rho);

/// Tr[rho (ln rho - ln sigma)]. Throws DivergentRelativeEntropy when rho is
/// not supported on the support of sigma.
double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

/// exp(-beta H) / Tr exp(-beta H). beta = 0 gives I/dim.
DensityMatrix gibbs_state(const HermitianOperator& h, double beta);

EigenDecomposition hermitian_eig(const HermitianOperator& h);

/// exp(-i H t), computed from the spectral decomposition of H.
ComplexMatrix matrix_exp_hermitian_prop(const HermitianOperator& h, double t);

/// Eigendecomposition M = V diag(lambda) V^-1 of a diagonalisable, generally
/// non-normal matrix, kept so that exp(t M) can be formed for many t.
/// Throws NumericalError if V is too ill-conditioned to be trusted.
class SpectralExponential {
 public:
  explicit SpectralExponential(const ComplexMatrix& m);

  ComplexMatrix exp(double t) const;
  const ComplexVector& eigenvalues() const { return lambda_; }
  double condition_number() const { return cond_; }

 private:
  ComplexVector lambda_;
  ComplexMatrix v_;
  ComplexMatrix v_inv_;
  double cond_ = 1.0;
};

/// exp(t M) computed spectrally; see SpectralExponential.
ComplexMatrix matrix_exp_diagonalizable(const ComplexMatrix& m, double t);

/// Tr[rho H].
double expectation(const DensityMatrix& rho, const HermitianOperator& h);

/// Entrywise comparison, max |a_ij - b_ij| <= tol.
bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b,
                  double tol = kMatrixEqualityTol);

/// Largest entrywise deviation max |a_ij - b_ij|.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace qotto
