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


// Time evolution for the four strokes: exact superoperator exponentials for
// the cold contact, closed-form commuting-drive unitaries for the ramps and
// an ideal Gibbs reset for the hot contact.

#pragma once

#include <vector>

#include "qotto/qmat.hpp"
#include "qotto/reservoir.hpp"

namespace qotto {

/// Largest integrator step used when sampling GKSL trajectories.
inline constexpr double kMaxIntegratorStep = 1e-4;  // s

/// Propagated states may dip this far below zero before the run aborts.
inline constexpr double kPropagationPositivityTol = 1e-7;

/// Linear frequency ramp omega(t) = omega_start + (omega_end - omega_start) t / duration
/// of the drive H(t) = (omega(t)/2) sigma_z.
struct RampSpec {
  double omega_start = 0.0;  // rad/s
  double omega_end = 0.0;    // rad/s
  double duration = 0.0;     // s

  void validate() const;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<DensityMatrix> states;
};

/// exp(t L) for one generator, diagonalised once and reusable for any t.
class GKSLPropagator {
 public:
  explicit GKSLPropagator(const GKSLGenerator& gen);

  /// exp(t L) as a 16x16 superoperator on column-stacked states.
  ComplexMatrix superoperator(double t) const { return spectral_.exp(t); }

  /// State after time t. Aborts with NumericalError if positivity is lost
  /// beyond kPropagationPositivityTol.
  DensityMatrix evolve(const DensityMatrix& rho, double t) const;

 private:
  SpectralExponential spectral_;
};

/// Sample times for an evolution of the given duration together with the
/// superoperators that advance one sample. Times are multiples of
/// sample_step, plus the exact end point when duration is not a multiple.
struct SampleSchedule {
  std::vector<double> times;
  ComplexMatrix per_sample;  // exp(sample_step L) as a product of sub-steps
  ComplexMatrix last;        // operator for the final (possibly short) interval

  /// Superoperator taking sample k-1 to sample k (k >= 1).
  const ComplexMatrix& advance(std::size_t k) const {
    return k + 1 == times.size() ? last : per_sample;
  }
};

SampleSchedule make_schedule(const GKSLPropagator& prop, double duration,
                             double sample_step);

/// Samples the GKSL evolution at multiples of sample_step, plus the exact
/// end point when duration is not a multiple. Each sample interval is
/// covered by equal sub-steps h <= kMaxIntegratorStep, all using one
/// precomputed exp(h L).
Trajectory propagate_gksl(const DensityMatrix& rho0, const GKSLGenerator& gen,
                          double duration, double sample_step);

/// Same as above with a propagator that is already diagonalised.
Trajectory propagate_gksl(const DensityMatrix& rho0, const GKSLPropagator& prop,
                          double duration, double sample_step);

/// Phi = integral of omega(s) ds over the ramp.
double ramp_phase(const RampSpec& ramp);

/// exp(-i sigma_z Phi / 2). Exact because the drive commutes with itself at
/// all times.
ComplexMatrix ramp_propagator(const RampSpec& ramp);

/// U rho U^dagger.
DensityMatrix apply_unitary(const DensityMatrix& rho, const ComplexMatrix& u);

/// (omega/2) sigma_z.
HermitianOperator qubit_hamiltonian(double omega);

/// Complete thermalisation: gibbs_state(H, beta). Requires beta > 0.
DensityMatrix thermal_reset(const HermitianOperator& h, double beta);

}  // namespace qotto
