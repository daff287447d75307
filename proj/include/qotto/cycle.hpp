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


// Four-stroke quantum Otto refrigerator with an engineered cold reservoir.
//
//   1. compression ramp omega0 -> omega_tau1 (unitary, refrigerant alone)
//   2. contact with the auxiliary qubit + Markovian bath for delta_tau_c
//   3. expansion ramp omega_tau1 -> omega0
//   4. complete thermalisation with the hot bath

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qotto/dynamics.hpp"
#include "qotto/qmat.hpp"
#include "qotto/reservoir.hpp"

namespace qotto {

enum class AuxInitPolicy { kFreshGibbs, kCarryOver };

struct CycleConfig {
  double omega0 = 0.0;        // rad/s
  double omega_tau1 = 0.0;    // rad/s
  double omega_a = 0.0;       // rad/s
  double kappa = 0.0;         // 1/s
  double beta_h = 0.0;        // s
  double beta_c = 0.0;        // s
  double tau1 = 0.0;          // s, each ramp
  double delta_tau_c = 0.0;   // s
  double delta_tau_h = 0.0;   // s
  double j_over_kappa = 0.0;
  AuxInitPolicy aux_policy = AuxInitPolicy::kFreshGibbs;

  /// omega0/2pi = 3.6 kHz, omega_tau1/2pi = omega_A/2pi = 2.2 kHz,
  /// kappa = 20 /s, beta_c omega_tau1 = 2.5, beta_h omega0 = 3.0,
  /// tau1 = 0.75 ms, delta_tau_h = 0.25 s, J/kappa = 0.5,
  /// delta_tau_c = 120 ms.
  static CycleConfig defaults();

  /// Throws std::invalid_argument on a violated invariant.
  void validate() const;

  double cycle_time() const { return 2.0 * tau1 + delta_tau_c + delta_tau_h; }
  double cop_otto() const { return omega_tau1 / (omega0 - omega_tau1); }
  double cop_carnot() const { return 1.0 / (beta_c / beta_h - 1.0); }
  ReservoirParams reservoir() const;
};

/// Energies in rad/s (natural units). Refrigerant snapshots are 2x2, the
/// joint SA snapshots 4x4.
struct StrokeLedger {
  double U0 = 0.0, U_tau1 = 0.0, U_tau2 = 0.0, U_tau3 = 0.0, U_tau4 = 0.0;
  double W1 = 0.0, W3 = 0.0, W_net = 0.0;
  double Qc_S = 0.0, Qh = 0.0;
  double dV_SA = 0.0;
  double I_SA = 0.0;  // nat, at tau2

  // Second-stroke energies on the joint side, used to re-derive the heat
  // released by the reservoir independently of Qc_S.
  double E_SA_tau1 = 0.0, E_SA_tau2 = 0.0;  // Tr[rho H^SA]
  double U_A_tau1 = 0.0, U_A_tau2 = 0.0;    // Tr[rho^A (omega_A/2) sigma_z]

  DensityMatrix rho0 = DensityMatrix::maximally_mixed(2);
  DensityMatrix rho_tau1 = DensityMatrix::maximally_mixed(2);
  DensityMatrix rho_tau2 = DensityMatrix::maximally_mixed(2);
  DensityMatrix rho_tau3 = DensityMatrix::maximally_mixed(2);
  DensityMatrix rho_tau4 = DensityMatrix::maximally_mixed(2);
  DensityMatrix sa_tau1 = DensityMatrix::maximally_mixed(4);
  DensityMatrix sa_tau2 = DensityMatrix::maximally_mixed(4);
};

struct RegimeFlags {
  bool qc_r_released = false;  // Qc_S + dV_SA > 0
  bool w_net_positive = false;
  bool qh_rejected = false;    // Qh < 0
  bool gamma_positive = false;

  /// The three operating constraints of a refrigerator.
  bool refrigerator() const {
    return qc_r_released && w_net_positive && qh_rejected;
  }
  bool all() const { return refrigerator() && gamma_positive; }
  /// "1101"-style string in field order.
  std::string bits() const;
};

/// Quantities that need Qc_S != 0 or W_net != 0 are NaN when undefined.
struct Metrics {
  double cop = 0.0;
  double gamma = 0.0;
  double overestimation = 0.0;  // 1/gamma
  double cooling_power = 0.0;   // (Qc_S + dV_SA) / tau_cycle
  double injected_power = 0.0;  // W_net / tau_cycle
  double cop_lag_L = 0.0;
  double quasistatic_lag_F = 0.0;
  double cop_otto = 0.0;
  double cop_carnot = 0.0;
  double cycle_time = 0.0;
  RegimeFlags flags;
};

struct CycleResult {
  StrokeLedger ledger;
  Metrics metrics;
};

/// Prepares everything that does not depend on delta_tau_c (the reservoir
/// generator and its spectral decomposition), so sweeps over the contact
/// time reuse one diagonalisation.
class CycleRunner {
 public:
  explicit CycleRunner(const CycleConfig& cfg);

  const CycleConfig& config() const { return cfg_; }
  const GKSLGenerator& generator() const { return gen_; }

  /// Runs one cycle with the given contact time. aux_init overrides the
  /// auxiliary qubit's state at tau1 (otherwise Gibbs at beta_c).
  CycleResult run(double delta_tau_c,
                  const std::optional<DensityMatrix>& aux_init = {}) const;

 private:
  CycleConfig cfg_;
  GKSLGenerator gen_;
  GKSLPropagator prop_;
};

CycleResult run_cycle(const CycleConfig& cfg);

Metrics figures_of_merit(const StrokeLedger& ledger, const CycleConfig& cfg);

struct IdentityCheck {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool applicable = true;

  bool pass() const { return !applicable || residual <= tolerance; }
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;

  bool all_pass() const;
  const IdentityCheck& get(const std::string& name) const;
};

inline constexpr double kFirstLawTol = 1e-9;
inline constexpr double kReservoirEnergyTol = 1e-9;
inline constexpr double kCopIdentityTol = 1e-6;
inline constexpr double kQuasistaticLagTol = 1e-8;

/// Residuals of
///   first_law          |W1 + W3 + Qc + Qh| / |W_net|
///   reservoir_energy   heat released by A + bath vs Qc_S + dV_SA
///   cop_carnot_lag     cop vs gamma eC / (1 + eC L), relative
///   quasistatic_lag    |F|
///   cop_otto_gamma     cop vs gamma eO, relative
///   gamma_necessity    gamma > 0 whenever the refrigerator constraints hold
/// Never throws; checks that need Qc_S != 0 or W_net != 0 are marked not
/// applicable when those vanish.
IdentityReport cop_identity_checks(const StrokeLedger& ledger,
                                   const Metrics& metrics,
                                   const CycleConfig& cfg);

double mutual_information_at_tau2(const StrokeLedger& ledger);

/// S(rho^S) + S(rho^A) - S(rho^SA).
double mutual_information(const DensityMatrix& sa);

struct LimitCycleResult {
  CycleResult result;
  int iterations = 0;
  double last_delta = 0.0;  // trace distance between consecutive tau2 SA states
  bool converged = false;
  /// Trace distance between the converged tau2 SA state and the one from a
  /// single fresh-Gibbs cycle.
  double distance_from_fresh = 0.0;
};

/// Repeats cycles, carrying the auxiliary qubit's tau2 state into the next
/// cycle, until the tau2 SA state moves by less than tol. The fresh-Gibbs
/// policy converges after one iteration by definition. Non-convergence is
/// reported through `converged`, not thrown.
LimitCycleResult run_to_limit_cycle(const CycleConfig& cfg, int max_iters,
                                    double tol);

}  // namespace qotto
