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


// Trace-distance witness of non-Markovian refrigerant dynamics: a pair of
// orthogonal refrigerant states, each attached to the same auxiliary
// preparation, is evolved under the reservoir generator and any growth of
// their distinguishability signals information flowing back.

#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "qotto/qmat.hpp"
#include "qotto/reservoir.hpp"

namespace qotto {

inline constexpr double kDefaultWitnessStep = 1e-4;      // s
inline constexpr double kDefaultWitnessTolerance = 1e-6;  // 1/s

struct WitnessConfig {
  ReservoirParams params;
  double t_max = 0.3;                       // s
  double grid_step = kDefaultWitnessStep;   // s
  ComplexVector psi1 = basis_ket(2, 0);
  ComplexVector psi2 = basis_ket(2, 1);
  double positivity_tolerance = kDefaultWitnessTolerance;
  /// Auxiliary preparation; Gibbs((omega_A/2) sigma_z, params.beta) if unset.
  std::optional<DensityMatrix> aux_init;

  /// Resonant qubits at 2pi x 2.2 kHz, kappa = 20 /s, bath at T = 2 omega_A
  /// (beta omega_A = 1/2), pair (|0>, |1>), t in [0, 0.3 s].
  static WitnessConfig standard(double j_over_kappa);

  void validate() const;
};

struct WitnessReport {
  std::vector<double> times;
  std::vector<double> D;
  std::vector<double> dDdt;  // central differences, one-sided at the ends
  double max_positive_derivative = 0.0;  // max(0, max dDdt)
  double positivity_tolerance = kDefaultWitnessTolerance;
  bool is_non_markovian = false;
};

WitnessReport trace_distance_trajectory(const WitnessConfig& cfg);

/// Derivative of sampled data on a possibly non-uniform grid: central
/// differences inside, one-sided at both ends.
std::vector<double> sampled_derivative(const std::vector<double>& t,
                                       const std::vector<double>& y);

/// Point k of n on the upper Bloch hemisphere: z = 1 - k/n (equal-area
/// bands), azimuth k times the golden angle. k = 0 is the north pole.
Eigen::Vector3d hemisphere_point(int k, int n);

/// Pure qubit state with the given unit Bloch vector.
ComplexVector bloch_ket(const Eigen::Vector3d& r);

struct PairScanOptions {
  double grid_step = kDefaultWitnessStep;
  double positivity_tolerance = kDefaultWitnessTolerance;
  int jobs = 1;
};

struct PairResult {
  Eigen::Vector3d bloch;  // first state of the pair; the second is -bloch
  double max_positive_derivative = 0.0;
  double blp = 0.0;
};

struct PairScanReport {
  std::vector<PairResult> pairs;  // in grid order
  double max_positive_derivative = 0.0;
  int worst_pair = 0;
  bool is_non_markovian = false;
};

/// Runs the witness for n_pairs antipodal pairs on the hemisphere grid.
/// Results do not depend on opts.jobs.
PairScanReport pair_scan(const ReservoirParams& params, int n_pairs,
                         double t_max, const PairScanOptions& opts = {});

/// Trapezoidal integral over the grid of the derivative samples that exceed
/// the report's positivity tolerance (others count as zero). Zero exactly
/// when the report is Markovian.
double blp_accumulator(const WitnessReport& report);

}  // namespace qotto
