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


#include "qotto/dynamics.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qotto {

namespace {

constexpr Complex kI{0.0, 1.0};

DensityMatrix to_state(const ComplexVector& v, Eigen::Index dim, double t) {
  DensityTolerances tol;
  tol.positivity = kPropagationPositivityTol;
  try {
    return DensityMatrix(unvec(v, dim), tol);
  } catch (const InvariantError& e) {
    std::ostringstream os;
    os << "GKSL propagation lost a state invariant at t = " << t
       << " s: " << e.what();
    throw NumericalError(os.str());
  }
}

}  // namespace

void RampSpec::validate() const {
  if (!(omega_start > 0.0) || !(omega_end > 0.0) ||
      !std::isfinite(omega_start) || !std::isfinite(omega_end)) {
    throw std::invalid_argument("RampSpec: frequencies must be finite and > 0");
  }
  if (!(duration > 0.0) || !std::isfinite(duration)) {
    throw std::invalid_argument("RampSpec: duration must be finite and > 0");
  }
}

GKSLPropagator::GKSLPropagator(const GKSLGenerator& gen)
    : spectral_(gen.liouvillian()) {}

DensityMatrix GKSLPropagator::evolve(const DensityMatrix& rho, double t) const {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw std::invalid_argument("GKSLPropagator::evolve: t must be finite and >= 0");
  }
  if (t == 0.0) return rho;
  return to_state(spectral_.exp(t) * vec(rho.matrix()), rho.dim(), t);
}

Trajectory propagate_gksl(const DensityMatrix& rho0, const GKSLGenerator& gen,
                          double duration, double sample_step) {
  return propagate_gksl(rho0, GKSLPropagator(gen), duration, sample_step);
}

SampleSchedule make_schedule(const GKSLPropagator& prop, double duration,
                             double sample_step) {
  if (!(sample_step > 0.0) || !std::isfinite(sample_step)) {
    throw std::invalid_argument("propagate_gksl: sample_step must be > 0");
  }
  if (!(duration >= 0.0) || !std::isfinite(duration)) {
    throw std::invalid_argument("propagate_gksl: duration must be finite and >= 0");
  }

  // An end point within this fraction of a step of the last full sample is
  // merged with it instead of producing a near-duplicate time.
  constexpr double kMergeFraction = 1e-9;
  const long n_full = static_cast<long>(
      std::floor(duration / sample_step + kMergeFraction));
  double remainder = duration - static_cast<double>(n_full) * sample_step;
  if (remainder < kMergeFraction * sample_step) remainder = 0.0;

  auto stepped = [&prop](double interval) {
    const long n = std::max(
        1L, static_cast<long>(std::ceil(interval / kMaxIntegratorStep - 1e-9)));
    const ComplexMatrix step = prop.superoperator(interval / static_cast<double>(n));
    ComplexMatrix total = step;
    for (long i = 1; i < n; ++i) total = step * total;
    return total;
  };

  SampleSchedule s;
  s.per_sample = stepped(sample_step);
  s.last = remainder > 0.0 ? stepped(remainder) : s.per_sample;
  s.times.reserve(static_cast<std::size_t>(n_full) + 2);
  s.times.push_back(0.0);
  for (long k = 1; k <= n_full; ++k) {
    s.times.push_back(static_cast<double>(k) * sample_step);
  }
  if (remainder > 0.0) {
    s.times.push_back(duration);
  } else if (n_full > 0) {
    s.times.back() = duration;
  }
  return s;
}

Trajectory propagate_gksl(const DensityMatrix& rho0, const GKSLPropagator& prop,
                          double duration, double sample_step) {
  const SampleSchedule sched = make_schedule(prop, duration, sample_step);
  Trajectory traj;
  traj.times = sched.times;
  traj.states.reserve(sched.times.size());
  traj.states.push_back(rho0);
  ComplexVector v = vec(rho0.matrix());
  for (std::size_t k = 1; k < sched.times.size(); ++k) {
    v = sched.advance(k) * v;
    traj.states.push_back(to_state(v, rho0.dim(), sched.times[k]));
  }
  return traj;
}

double ramp_phase(const RampSpec& ramp) {
  ramp.validate();
  return 0.5 * ramp.duration * (ramp.omega_start + ramp.omega_end);
}

ComplexMatrix ramp_propagator(const RampSpec& ramp) {
  const double phi = ramp_phase(ramp);
  ComplexMatrix u = ComplexMatrix::Zero(2, 2);
  u(0, 0) = std::exp(-0.5 * kI * phi);
  u(1, 1) = std::exp(0.5 * kI * phi);
  return u;
}

DensityMatrix apply_unitary(const DensityMatrix& rho, const ComplexMatrix& u) {
  if (u.rows() != rho.dim() || u.cols() != rho.dim()) {
    throw DimensionError("apply_unitary: dimension mismatch");
  }
  return DensityMatrix(u * rho.matrix() * u.adjoint());
}

HermitianOperator qubit_hamiltonian(double omega) {
  return HermitianOperator(0.5 * omega * pauli_z());
}

DensityMatrix thermal_reset(const HermitianOperator& h, double beta) {
  if (!(beta > 0.0)) {
    throw std::invalid_argument("thermal_reset: beta must be > 0");
  }
  return gibbs_state(h, beta);
}

}  // namespace qotto
