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


// The engineered cold reservoir: refrigerant S coupled to an auxiliary
// qubit A, which in turn decays into a flat Markovian bosonic bath.

#pragma once

#include <array>
#include <vector>

#include "qotto/qmat.hpp"

namespace qotto {

struct ReservoirParams {
  double omega_s = 0.0;  // rad/s
  double omega_a = 0.0;  // rad/s
  double J = 0.0;        // rad/s, S-A coupling
  double kappa = 0.0;    // 1/s, auxiliary decay rate into the bath
  double beta = 0.0;     // s, inverse bath temperature (may be +inf)

  /// Builds params with J = j_over_kappa * kappa.
  static ReservoirParams from_ratio(double omega_s, double omega_a,
                                    double j_over_kappa, double kappa,
                                    double beta);

  /// Throws std::invalid_argument on non-positive gaps, rates or beta, or
  /// negative J.
  void validate() const;

  double sum() const { return omega_s + omega_a; }         // Omega
  double detuning() const { return omega_s - omega_a; }    // Delta
};

/// Closed-form eigensystem of the two-qubit Hamiltonian.
///   |E3> = alpha|00> + xi|11>      E3 =  R/2
///   |E2> = eta|01> - delta|10>     E2 =  r/2
///   |E1> = delta|01> + eta|10>     E1 = -r/2
///   |E0> = -xi|00> + alpha|11>     E0 = -R/2
/// with R = sqrt(Omega^2 + 4J^2) and r = sqrt(Delta^2 + 4J^2).
struct EigenSystem {
  std::array<double, 4> energies{};
  ComplexMatrix vectors;  // column n is |E_n>
  double alpha = 1.0;
  double xi = 0.0;
  double eta = 1.0;
  double delta = 0.0;

  ComplexVector ket(int n) const { return vectors.col(n); }
  ComplexMatrix projector(int n) const { return ket(n) * ket(n).adjoint(); }
};

struct DecayRates {
  double down = 0.0;  // (kappa/2)(1 + n)
  double up = 0.0;    // (kappa/2) n
  double n_be = 0.0;
};

struct TransitionData {
  double eps1 = 0.0;  // omega_01 = omega_23
  double eps2 = 0.0;  // omega_02 = omega_13
  DecayRates rates1;
  DecayRates rates2;
};

struct LindbladChannel {
  ComplexMatrix op;
  double rate = 0.0;
};

/// Bohr-frequency components A_k(omega) = sum Pi_n A_k Pi_m of the bath
/// coupling operators A_1 = I (x) sigma_x, A_2 = I (x) sigma_y.
/// Index k - 1 selects A_k.
struct SectorOperators {
  std::array<ComplexMatrix, 2> eps1;        // +eps1
  std::array<ComplexMatrix, 2> minus_eps1;  // -eps1
  std::array<ComplexMatrix, 2> eps2;
  std::array<ComplexMatrix, 2> minus_eps2;
  std::array<ComplexMatrix, 2> omega03;     // +-omega_03 combined
  std::array<ComplexMatrix, 2> omega12;     // +-omega_12 combined
  std::array<ComplexMatrix, 2> diagonal;    // omega = 0
};

HermitianOperator two_qubit_hamiltonian(const ReservoirParams& p);

/// J sigma_x (x) sigma_x.
HermitianOperator interaction_hamiltonian(double J);

EigenSystem analytic_eigensystem(const ReservoirParams& p);

/// (eps1, eps2) from the eigenenergies.
std::array<double, 2> transition_frequencies(const EigenSystem& es);

/// Throws std::invalid_argument for eps <= 0.
DecayRates decay_rates(double eps, const ReservoirParams& p);

TransitionData transition_data(const EigenSystem& es, const ReservoirParams& p);

/// {(L1, down(eps1)), (L2, down(eps2)), (L1^dagger, up(eps1)),
///  (L2^dagger, up(eps2))}.
std::vector<LindbladChannel> lindblad_channels(const EigenSystem& es,
                                               const TransitionData& td);

SectorOperators sector_operators(const EigenSystem& es);

/// d rho / dt = -i[H, rho] + sum_j g_j (L_j rho L_j^dagger
///              - {L_j^dagger L_j, rho}/2).
/// The 16x16 liouvillian acts on column-stacked vec(rho).
class GKSLGenerator {
 public:
  GKSLGenerator(HermitianOperator hamiltonian,
                std::vector<LindbladChannel> channels);

  const HermitianOperator& hamiltonian() const { return h_; }
  const std::vector<LindbladChannel>& channels() const { return channels_; }
  const ComplexMatrix& liouvillian() const { return liouvillian_; }

  /// Direct matrix-level action on an operator (not necessarily a state).
  ComplexMatrix apply(const ComplexMatrix& x) const;

 private:
  HermitianOperator h_;
  std::vector<LindbladChannel> channels_;
  ComplexMatrix liouvillian_;
};

GKSLGenerator build_generator(const ReservoirParams& p);

/// Column-stacking vectorisation helpers.
ComplexVector vec(const ComplexMatrix& x);
ComplexMatrix unvec(const ComplexVector& v, Eigen::Index dim);

}  // namespace qotto
