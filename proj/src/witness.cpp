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


#include "qotto/witness.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "qotto/dynamics.hpp"
#include "qotto/parallel.hpp"

namespace qotto {

namespace {

DensityMatrix reduced_s(const ComplexVector& v, double t) {
  // Column-stacked 4x4: element (i, j) sits at 4j + i.
  ComplexMatrix m(2, 2);
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      m(x, y) = v(4 * (2 * y) + 2 * x) + v(4 * (2 * y + 1) + 2 * x + 1);
    }
  }
  DensityTolerances tol;
  tol.positivity = kPropagationPositivityTol;
  try {
    return DensityMatrix(std::move(m), tol);
  } catch (const InvariantError& e) {
    std::ostringstream os;
    os << "witness propagation lost a state invariant at t = " << t
       << " s: " << e.what();
    throw NumericalError(os.str());
  }
}

WitnessReport run_pair(const SampleSchedule& sched, const ComplexVector& psi1,
                       const ComplexVector& psi2, const DensityMatrix& aux,
                       double tolerance) {
  const ComplexMatrix a = DensityMatrix::pure(psi1).matrix();
  const ComplexMatrix b = DensityMatrix::pure(psi2).matrix();
  ComplexVector v1 = vec(tensor_product(a, aux.matrix()));
  ComplexVector v2 = vec(tensor_product(b, aux.matrix()));

  WitnessReport r;
  r.times = sched.times;
  r.positivity_tolerance = tolerance;
  r.D.reserve(sched.times.size());
  r.D.push_back(trace_distance(DensityMatrix(a), DensityMatrix(b)));
  for (std::size_t k = 1; k < sched.times.size(); ++k) {
    v1 = sched.advance(k) * v1;
    v2 = sched.advance(k) * v2;
    const double t = sched.times[k];
    r.D.push_back(trace_distance(reduced_s(v1, t), reduced_s(v2, t)));
  }
  r.dDdt = sampled_derivative(r.times, r.D);
  for (double d : r.dDdt) {
    r.max_positive_derivative = std::max(r.max_positive_derivative, d);
  }
  r.is_non_markovian = r.max_positive_derivative > tolerance;
  return r;
}

DensityMatrix default_aux(const WitnessConfig& cfg) {
  if (cfg.aux_init) return *cfg.aux_init;
  return gibbs_state(qubit_hamiltonian(cfg.params.omega_a), cfg.params.beta);
}

}  // namespace

WitnessConfig WitnessConfig::standard(double j_over_kappa) {
  const double omega = 2.0 * std::numbers::pi * 2200.0;
  WitnessConfig c;
  c.params = ReservoirParams::from_ratio(omega, omega, j_over_kappa, 20.0,
                                         1.0 / (2.0 * omega));
  return c;
}

void WitnessConfig::validate() const {
  params.validate();
  if (!(grid_step > 0.0) || !std::isfinite(grid_step)) {
    throw std::invalid_argument("WitnessConfig: grid_step must be > 0");
  }
  if (!(t_max >= 0.0) || !std::isfinite(t_max)) {
    throw std::invalid_argument("WitnessConfig: t_max must be >= 0");
  }
  if (!(positivity_tolerance >= 0.0)) {
    throw std::invalid_argument("WitnessConfig: tolerance must be >= 0");
  }
  for (const ComplexVector* psi : {&psi1, &psi2}) {
    if (psi->size() != 2 || std::abs(psi->norm() - 1.0) > 1e-10) {
      throw std::invalid_argument("WitnessConfig: pair states must be normalised qubit kets");
    }
  }
}

WitnessReport trace_distance_trajectory(const WitnessConfig& cfg) {
  cfg.validate();
  const GKSLPropagator prop(build_generator(cfg.params));
  const SampleSchedule sched = make_schedule(prop, cfg.t_max, cfg.grid_step);
  return run_pair(sched, cfg.psi1, cfg.psi2, default_aux(cfg),
                  cfg.positivity_tolerance);
}

std::vector<double> sampled_derivative(const std::vector<double>& t,
                                       const std::vector<double>& y) {
  if (t.size() != y.size()) {
    throw std::invalid_argument("sampled_derivative: size mismatch");
  }
  const std::size_t n = t.size();
  std::vector<double> d(n, 0.0);
  if (n < 2) return d;
  d[0] = (y[1] - y[0]) / (t[1] - t[0]);
  d[n - 1] = (y[n - 1] - y[n - 2]) / (t[n - 1] - t[n - 2]);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    d[i] = (y[i + 1] - y[i - 1]) / (t[i + 1] - t[i - 1]);
  }
  return d;
}

Eigen::Vector3d hemisphere_point(int k, int n) {
  if (n < 1 || k < 0 || k >= n) {
    throw std::invalid_argument("hemisphere_point: need 0 <= k < n");
  }
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  const double z = 1.0 - static_cast<double>(k) / static_cast<double>(n);
  const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
  const double phi = golden * static_cast<double>(k);
  return {rho * std::cos(phi), rho * std::sin(phi), z};
}

ComplexVector bloch_ket(const Eigen::Vector3d& r) {
  const double theta = std::acos(std::clamp(r.z() / r.norm(), -1.0, 1.0));
  const double phi = std::atan2(r.y(), r.x());
  ComplexVector psi(2);
  psi(0) = std::cos(0.5 * theta);
  psi(1) = std::polar(std::sin(0.5 * theta), phi);
  return psi;
}

PairScanReport pair_scan(const ReservoirParams& params, int n_pairs,
                         double t_max, const PairScanOptions& opts) {
  if (n_pairs < 1) throw std::invalid_argument("pair_scan: n_pairs must be >= 1");
  WitnessConfig base;
  base.params = params;
  base.t_max = t_max;
  base.grid_step = opts.grid_step;
  base.positivity_tolerance = opts.positivity_tolerance;
  base.validate();

  const GKSLPropagator prop(build_generator(params));
  const SampleSchedule sched = make_schedule(prop, t_max, opts.grid_step);
  const DensityMatrix aux = default_aux(base);

  PairScanReport out;
  out.pairs.resize(static_cast<std::size_t>(n_pairs));
  parallel_for(out.pairs.size(), opts.jobs, [&](std::size_t i) {
    const Eigen::Vector3d r = hemisphere_point(static_cast<int>(i), n_pairs);
    const WitnessReport w = run_pair(sched, bloch_ket(r), bloch_ket(-r), aux,
                                     opts.positivity_tolerance);
    out.pairs[i] = {r, w.max_positive_derivative, blp_accumulator(w)};
  });

  for (std::size_t i = 0; i < out.pairs.size(); ++i) {
    if (out.pairs[i].max_positive_derivative > out.max_positive_derivative) {
      out.max_positive_derivative = out.pairs[i].max_positive_derivative;
      out.worst_pair = static_cast<int>(i);
    }
  }
  out.is_non_markovian = out.max_positive_derivative > opts.positivity_tolerance;
  return out;
}

double blp_accumulator(const WitnessReport& report) {
  const auto& t = report.times;
  const auto& d = report.dDdt;
  if (t.size() != d.size()) {
    throw std::invalid_argument("blp_accumulator: report is inconsistent");
  }
  auto part = [&](std::size_t i) {
    return d[i] > report.positivity_tolerance ? d[i] : 0.0;
  };
  double acc = 0.0;
  for (std::size_t i = 1; i < t.size(); ++i) {
    acc += 0.5 * (part(i) + part(i - 1)) * (t[i] - t[i - 1]);
  }
  return acc;
}

}  // namespace qotto
