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


// Flat `key = value` run configuration. Frequencies are given as ordinary
// frequencies in kHz and converted to rad/s (omega = 2 pi f); rates in 1/s,
// times in s. Unknown or repeated keys are errors.

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qotto/cycle.hpp"
#include "qotto/reservoir.hpp"

namespace qotto::cli {

/// Bad command line or configuration (exit code 1).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  // Cycle and reservoir.
  double omega0_khz = 3.6;
  double omega_tau1_khz = 2.2;
  double omega_aux_khz = 2.2;
  double kappa_per_s = 20.0;
  double cold_beta_omega = 2.5;  // beta_c * omega_tau1
  double hot_beta_omega = 3.0;   // beta_h * omega0
  double tau1_s = 7.5e-4;
  double delta_tau_h_s = 0.25;
  AuxInitPolicy aux_init = AuxInitPolicy::kFreshGibbs;
  std::vector<double> ratios = {40.0, 10.0, 0.5};

  // sweep-tauc
  double tauc_min_s = 0.0;
  double tauc_max_s = 0.12;
  double tauc_step_s = 2.5e-4;

  // sweep-jkappa
  double jk_min = 0.1;
  double jk_max = 50.0;
  double jk_step = 0.1;
  std::vector<double> jk_tauc_s = {0.003, 0.05, 0.12};

  // cycle and limit-cycle
  double cycle_j_over_kappa = 0.5;
  double cycle_delta_tau_c_s = 0.12;
  int limit_max_iters = 500;
  double limit_tol = 1e-10;

  // witness and pair-scan
  double witness_omega_s_khz = 2.2;
  double witness_beta_omega = 0.5;  // beta * omega_aux
  double witness_t_max_s = 0.3;
  double witness_step_s = 1e-4;
  double positivity_tolerance = 1e-6;
  int n_pairs = 1000;

  /// Cycle configuration for one (J/kappa, delta_tau_c) point.
  CycleConfig cycle_config(double j_over_kappa, double delta_tau_c) const;
  /// Reservoir seen by the witness at the given J/kappa.
  ReservoirParams witness_params(double j_over_kappa) const;

  /// Canonical one-line `key=value;...` rendering of every key.
  std::string resolved() const;
};

/// Parses configuration text. Throws UsageError with the offending line.
RunConfig parse_config(const std::string& text);

/// Reads and parses a file. Throws UsageError if unreadable.
RunConfig load_config(const std::string& path);

/// min, min + step, ... up to max (inclusive within round-off).
/// Throws UsageError for an empty grid.
std::vector<double> make_grid(double min, double max, double step,
                              const char* what);

/// 2 pi * 1e3 * f.
double khz_to_rad_per_s(double f_khz);

}  // namespace qotto::cli
