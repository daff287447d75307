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


#include "qotto/cycle.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace qotto {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kEps = std::numeric_limits<double>::epsilon();

// |diff| / |scale| for a check with relative tolerance tol, except that a
// difference below the absolute round-off floor always passes: the
// denominator never drops below floor / tol.
double relative(double diff, double scale, double floor, double tol) {
  const double denom = std::max(std::abs(scale), floor / tol);
  if (denom == 0.0) return std::abs(diff) == 0.0 ? 0.0 : std::abs(diff);
  return std::abs(diff) / denom;
}

// Energies are differences of O(omega) internal energies; anything below
// this scale is round-off and is treated as zero.
double energy_floor(const StrokeLedger& lg) {
  return 64.0 * kEps *
         (std::abs(lg.U0) + std::abs(lg.U_tau1) + std::abs(lg.U_tau2) +
          std::abs(lg.U_tau3));
}

ComplexMatrix ramp_or_identity(double from, double to, double duration) {
  if (duration == 0.0) return identity(2);
  return ramp_propagator({from, to, duration});
}

}  // namespace

CycleConfig CycleConfig::defaults() {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  CycleConfig c;
  c.omega0 = two_pi * 3600.0;
  c.omega_tau1 = two_pi * 2200.0;
  c.omega_a = two_pi * 2200.0;
  c.kappa = 20.0;
  c.beta_c = 2.5 / c.omega_tau1;
  c.beta_h = 3.0 / c.omega0;
  c.tau1 = 7.5e-4;
  c.delta_tau_c = 0.12;
  c.delta_tau_h = 0.25;
  c.j_over_kappa = 0.5;
  c.aux_policy = AuxInitPolicy::kFreshGibbs;
  return c;
}

void CycleConfig::validate() const {
  std::ostringstream os;
  if (!(omega_tau1 > 0.0) || !(omega0 > omega_tau1) || !std::isfinite(omega0)) {
    os << " need omega0 > omega_tau1 > 0;";
  }
  if (!(omega_a > 0.0) || !std::isfinite(omega_a)) os << " omega_a must be > 0;";
  if (!(kappa > 0.0) || !std::isfinite(kappa)) os << " kappa must be > 0;";
  if (!(beta_h > 0.0) || !(beta_c > beta_h) || !std::isfinite(beta_c)) {
    os << " need beta_c > beta_h > 0;";
  }
  for (double d : {tau1, delta_tau_c, delta_tau_h}) {
    if (!(d >= 0.0) || !std::isfinite(d)) {
      os << " durations must be finite and >= 0;";
      break;
    }
  }
  if (!(j_over_kappa >= 0.0) || !std::isfinite(j_over_kappa)) {
    os << " J/kappa must be >= 0;";
  }
  const std::string bad = os.str();
  if (!bad.empty()) throw std::invalid_argument("CycleConfig:" + bad);
}

ReservoirParams CycleConfig::reservoir() const {
  return ReservoirParams::from_ratio(omega_tau1, omega_a, j_over_kappa, kappa,
                                     beta_c);
}

std::string RegimeFlags::bits() const {
  std::string s;
  for (bool b : {qc_r_released, w_net_positive, qh_rejected, gamma_positive}) {
    s += b ? '1' : '0';
  }
  return s;
}

// ---------------------------------------------------------------------------

CycleRunner::CycleRunner(const CycleConfig& cfg)
    : cfg_((cfg.validate(), cfg)),
      gen_(build_generator(cfg.reservoir())),
      prop_(gen_) {}

CycleResult CycleRunner::run(double delta_tau_c,
                             const std::optional<DensityMatrix>& aux_init) const {
  CycleConfig cfg = cfg_;
  cfg.delta_tau_c = delta_tau_c;
  cfg.validate();

  const HermitianOperator h0 = qubit_hamiltonian(cfg.omega0);
  const HermitianOperator h1 = qubit_hamiltonian(cfg.omega_tau1);
  const HermitianOperator h_a = qubit_hamiltonian(cfg.omega_a);
  const HermitianOperator h_int =
      interaction_hamiltonian(cfg.j_over_kappa * cfg.kappa);
  const HermitianOperator& h_sa = gen_.hamiltonian();

  StrokeLedger lg;
  lg.rho0 = gibbs_state(h0, cfg.beta_h);
  lg.rho_tau1 = apply_unitary(
      lg.rho0, ramp_or_identity(cfg.omega0, cfg.omega_tau1, cfg.tau1));

  const DensityMatrix aux =
      aux_init ? *aux_init : gibbs_state(h_a, cfg.beta_c);
  if (aux.dim() != 2) {
    throw DimensionError("CycleRunner::run: auxiliary state must be 2x2");
  }
  lg.sa_tau1 = DensityMatrix(tensor_product(lg.rho_tau1.matrix(), aux.matrix()));
  lg.sa_tau2 = prop_.evolve(lg.sa_tau1, delta_tau_c);
  lg.rho_tau2 = partial_trace(lg.sa_tau2, Subsystem::S);

  lg.rho_tau3 = apply_unitary(
      lg.rho_tau2, ramp_or_identity(cfg.omega_tau1, cfg.omega0, cfg.tau1));
  lg.rho_tau4 = thermal_reset(h0, cfg.beta_h);

  lg.U0 = expectation(lg.rho0, h0);
  lg.U_tau1 = expectation(lg.rho_tau1, h1);
  lg.U_tau2 = expectation(lg.rho_tau2, h1);
  lg.U_tau3 = expectation(lg.rho_tau3, h0);
  lg.U_tau4 = expectation(lg.rho_tau4, h0);

  lg.W1 = lg.U_tau1 - lg.U0;
  lg.Qc_S = lg.U_tau2 - lg.U_tau1;
  lg.W3 = lg.U_tau3 - lg.U_tau2;
  lg.Qh = lg.U_tau4 - lg.U_tau3;
  lg.W_net = lg.W1 + lg.W3;

  lg.dV_SA = expectation(lg.sa_tau2, h_int) - expectation(lg.sa_tau1, h_int);
  lg.E_SA_tau1 = expectation(lg.sa_tau1, h_sa);
  lg.E_SA_tau2 = expectation(lg.sa_tau2, h_sa);
  lg.U_A_tau1 = expectation(partial_trace(lg.sa_tau1, Subsystem::A), h_a);
  lg.U_A_tau2 = expectation(partial_trace(lg.sa_tau2, Subsystem::A), h_a);
  lg.I_SA = mutual_information(lg.sa_tau2);

  CycleResult out{lg, figures_of_merit(lg, cfg)};
  return out;
}

CycleResult run_cycle(const CycleConfig& cfg) {
  return CycleRunner(cfg).run(cfg.delta_tau_c);
}

Metrics figures_of_merit(const StrokeLedger& lg, const CycleConfig& cfg) {
  cfg.validate();
  Metrics m;
  m.cop_otto = cfg.cop_otto();
  m.cop_carnot = cfg.cop_carnot();
  m.cycle_time = cfg.cycle_time();

  const double floor = energy_floor(lg);
  const bool has_work = std::abs(lg.W_net) > floor;
  const bool has_heat = std::abs(lg.Qc_S) > floor;
  const double released = lg.Qc_S + lg.dV_SA;
  m.cop = has_work ? released / lg.W_net : kNaN;
  m.gamma = has_heat ? 1.0 + lg.dV_SA / lg.Qc_S : kNaN;
  m.overestimation = 1.0 / m.gamma;
  m.cooling_power = m.cycle_time > 0.0 ? released / m.cycle_time : kNaN;
  m.injected_power = m.cycle_time > 0.0 ? lg.W_net / m.cycle_time : kNaN;

  const HermitianOperator h0 = qubit_hamiltonian(cfg.omega0);
  const HermitianOperator h1 = qubit_hamiltonian(cfg.omega_tau1);
  const DensityMatrix eq_c = gibbs_state(h1, cfg.beta_c);
  const DensityMatrix eq_h = gibbs_state(h0, cfg.beta_h);

  const double d2 = relative_entropy(lg.rho_tau2, eq_c);
  m.cop_lag_L = has_heat
                    ? (relative_entropy(lg.rho_tau1, eq_c) - d2 +
                       relative_entropy(lg.rho_tau3, eq_h)) /
                          (cfg.beta_h * lg.Qc_S)
                    : kNaN;

  // Quasistatic references: the states an infinitely slow ramp would reach.
  const DensityMatrix qs_h =
      gibbs_state(h1, cfg.beta_h * cfg.omega0 / cfg.omega_tau1);
  const DensityMatrix qs_c =
      gibbs_state(h0, cfg.beta_c * cfg.omega_tau1 / cfg.omega0);
  const double weight =
      (cfg.beta_h * cfg.omega0) / (cfg.beta_c * cfg.omega_tau1);
  m.quasistatic_lag_F = relative_entropy(lg.rho_tau1, qs_h) +
                        weight * (relative_entropy(lg.rho_tau3, qs_c) - d2);

  m.flags.qc_r_released = released > floor;
  m.flags.w_net_positive = lg.W_net > floor;
  m.flags.qh_rejected = lg.Qh < -floor;
  m.flags.gamma_positive = m.gamma > 0.0;
  return m;
}

// ---------------------------------------------------------------------------

bool IdentityReport::all_pass() const {
  for (const auto& c : checks) {
    if (!c.pass()) return false;
  }
  return true;
}

const IdentityCheck& IdentityReport::get(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return c;
  }
  throw std::out_of_range("IdentityReport: no check named " + name);
}

IdentityReport cop_identity_checks(const StrokeLedger& lg, const Metrics& m,
                                   const CycleConfig& cfg) {
  IdentityReport r;

  const double floor = energy_floor(lg);
  r.checks.push_back({"first_law",
                      relative(lg.W1 + lg.W3 + lg.Qc_S + lg.Qh, lg.W_net, floor,
                               kFirstLawTol),
                      kFirstLawTol, true});

  // Energy released by A + bath: the bath hands Tr[H^SA d rho] to the pair,
  // of which the part not kept by A leaves the reservoir.
  const double released_route =
      (lg.E_SA_tau2 - lg.E_SA_tau1) - (lg.U_A_tau2 - lg.U_A_tau1);
  const double sa_scale = std::abs(lg.E_SA_tau1) + std::abs(lg.E_SA_tau2) +
                          std::abs(lg.U_A_tau1) + std::abs(lg.U_A_tau2);
  r.checks.push_back({"reservoir_energy",
                      relative(released_route - (lg.Qc_S + lg.dV_SA),
                               lg.Qc_S + lg.dV_SA, 64.0 * kEps * sa_scale,
                               kReservoirEnergyTol),
                      kReservoirEnergyTol, true});

  const bool defined = std::isfinite(m.cop) && std::isfinite(m.gamma) &&
                       std::isfinite(m.cop_lag_L) && m.cop != 0.0;
  const double carnot_pred =
      m.gamma * m.cop_carnot / (1.0 + m.cop_carnot * m.cop_lag_L);
  r.checks.push_back({"cop_carnot_lag",
                      defined ? std::abs(m.cop - carnot_pred) / std::abs(m.cop) : kNaN,
                      kCopIdentityTol, defined});

  r.checks.push_back({"quasistatic_lag", std::abs(m.quasistatic_lag_F),
                      kQuasistaticLagTol, true});

  r.checks.push_back({"cop_otto_gamma",
                      defined ? std::abs(m.cop - m.gamma * m.cop_otto) / std::abs(m.cop)
                              : kNaN,
                      kCopIdentityTol, defined});

  r.checks.push_back({"gamma_necessity", m.gamma > 0.0 ? 0.0 : 1.0, 0.0,
                      m.flags.refrigerator()});
  (void)cfg;
  return r;
}

double mutual_information(const DensityMatrix& sa) {
  const double i = von_neumann_entropy(partial_trace(sa, Subsystem::S)) +
                   von_neumann_entropy(partial_trace(sa, Subsystem::A)) -
                   von_neumann_entropy(sa);
  return std::max(i, 0.0);
}

double mutual_information_at_tau2(const StrokeLedger& ledger) {
  return mutual_information(ledger.sa_tau2);
}

LimitCycleResult run_to_limit_cycle(const CycleConfig& cfg, int max_iters,
                                    double tol) {
  if (max_iters < 1) {
    throw std::invalid_argument("run_to_limit_cycle: max_iters must be >= 1");
  }
  const CycleRunner runner(cfg);
  const CycleResult fresh = runner.run(cfg.delta_tau_c);

  LimitCycleResult out;
  out.result = fresh;
  out.iterations = 1;
  if (cfg.aux_policy == AuxInitPolicy::kFreshGibbs) {
    out.converged = true;
    return out;
  }

  out.last_delta = std::numeric_limits<double>::infinity();
  CycleResult prev = fresh;
  while (out.iterations < max_iters) {
    const DensityMatrix aux = partial_trace(prev.ledger.sa_tau2, Subsystem::A);
    CycleResult cur = runner.run(cfg.delta_tau_c, aux);
    ++out.iterations;
    out.last_delta = trace_distance(cur.ledger.sa_tau2, prev.ledger.sa_tau2);
    prev = std::move(cur);
    if (out.last_delta < tol) {
      out.converged = true;
      break;
    }
  }
  out.result = prev;
  out.distance_from_fresh =
      trace_distance(prev.ledger.sa_tau2, fresh.ledger.sa_tau2);
  return out;
}

}  // namespace qotto
