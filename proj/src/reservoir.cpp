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


#include "qotto/reservoir.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qotto {

namespace {

constexpr Complex kI{0.0, 1.0};

ComplexMatrix outer(const ComplexVector& a, const ComplexVector& b) {
  return a * b.adjoint();
}

ComplexMatrix sector(const EigenSystem& es, const ComplexMatrix& a,
                     std::initializer_list<std::pair<int, int>> pairs) {
  ComplexMatrix out = ComplexMatrix::Zero(4, 4);
  for (const auto& [n, m] : pairs) {
    out += es.projector(n) * a * es.projector(m);
  }
  return out;
}

}  // namespace

ReservoirParams ReservoirParams::from_ratio(double omega_s, double omega_a,
                                            double j_over_kappa, double kappa,
                                            double beta) {
  ReservoirParams p{omega_s, omega_a, j_over_kappa * kappa, kappa, beta};
  p.validate();
  return p;
}

void ReservoirParams::validate() const {
  std::ostringstream os;
  if (!(omega_s > 0.0) || !std::isfinite(omega_s)) os << " omega_s=" << omega_s;
  if (!(omega_a > 0.0) || !std::isfinite(omega_a)) os << " omega_a=" << omega_a;
  if (!(J >= 0.0) || !std::isfinite(J)) os << " J=" << J;
  if (!(kappa > 0.0) || !std::isfinite(kappa)) os << " kappa=" << kappa;
  if (!(beta > 0.0)) os << " beta=" << beta;
  const std::string bad = os.str();
  if (!bad.empty()) {
    throw std::invalid_argument("ReservoirParams: invalid" + bad);
  }
}

HermitianOperator two_qubit_hamiltonian(const ReservoirParams& p) {
  const ComplexMatrix i2 = identity(2);
  return HermitianOperator(0.5 * p.omega_s * tensor_product(pauli_z(), i2) +
                           0.5 * p.omega_a * tensor_product(i2, pauli_z()) +
                           interaction_hamiltonian(p.J).matrix());
}

HermitianOperator interaction_hamiltonian(double J) {
  return HermitianOperator(J * tensor_product(pauli_x(), pauli_x()));
}

EigenSystem analytic_eigensystem(const ReservoirParams& p) {
  p.validate();
  const double big_omega = p.sum();
  const double big_delta = p.detuning();
  const double two_j = 2.0 * p.J;
  const double R = std::hypot(big_omega, two_j);
  const double r = std::hypot(big_delta, two_j);

  EigenSystem es;
  const double n1 = std::hypot(two_j, big_omega + R);
  es.alpha = (big_omega + R) / n1;
  es.xi = two_j / n1;

  // (Delta + r, -2J) is 0/0 at J = 0 with Delta <= 0; (2J, -(r - Delta)) is
  // the same vector up to normalisation and is well conditioned there.
  if (r == 0.0) {
    es.eta = 1.0;
    es.delta = 0.0;
  } else if (big_delta >= 0.0) {
    const double n2 = std::hypot(two_j, big_delta + r);
    es.eta = (big_delta + r) / n2;
    es.delta = -two_j / n2;
  } else {
    const double n2 = std::hypot(two_j, r - big_delta);
    es.eta = two_j / n2;
    es.delta = -(r - big_delta) / n2;
  }

  es.energies = {-0.5 * R, -0.5 * r, 0.5 * r, 0.5 * R};

  es.vectors = ComplexMatrix::Zero(4, 4);
  es.vectors(0, 0) = -es.xi;
  es.vectors(3, 0) = es.alpha;
  es.vectors(1, 1) = es.delta;
  es.vectors(2, 1) = es.eta;
  es.vectors(1, 2) = es.eta;
  es.vectors(2, 2) = -es.delta;
  es.vectors(0, 3) = es.alpha;
  es.vectors(3, 3) = es.xi;
  return es;
}

std::array<double, 2> transition_frequencies(const EigenSystem& es) {
  const double R = es.energies[3] - es.energies[0];
  const double r = es.energies[2] - es.energies[1];
  return {0.5 * (R - r), 0.5 * (R + r)};
}

DecayRates decay_rates(double eps, const ReservoirParams& p) {
  if (!(eps > 0.0)) {
    throw std::invalid_argument("decay_rates: transition frequency must be > 0");
  }
  if (!(p.beta > 0.0)) {
    throw std::invalid_argument("decay_rates: beta must be > 0");
  }
  DecayRates d;
  d.n_be = 1.0 / std::expm1(p.beta * eps);
  d.down = 0.5 * p.kappa * (1.0 + d.n_be);
  d.up = 0.5 * p.kappa * d.n_be;
  return d;
}

TransitionData transition_data(const EigenSystem& es,
                               const ReservoirParams& p) {
  const auto [e1, e2] = transition_frequencies(es);
  TransitionData td;
  td.eps1 = e1;
  td.eps2 = e2;
  td.rates1 = decay_rates(e1, p);
  td.rates2 = decay_rates(e2, p);
  return td;
}

std::vector<LindbladChannel> lindblad_channels(const EigenSystem& es,
                                               const TransitionData& td) {
  const ComplexMatrix l1 =
      2.0 * es.alpha * es.eta * (outer(es.ket(0), es.ket(1)) + outer(es.ket(2), es.ket(3)));
  const ComplexMatrix l2 =
      2.0 * es.alpha * es.delta * (-outer(es.ket(0), es.ket(2)) + outer(es.ket(1), es.ket(3)));
  return {
      {l1, td.rates1.down},
      {l2, td.rates2.down},
      {l1.adjoint(), td.rates1.up},
      {l2.adjoint(), td.rates2.up},
  };
}

SectorOperators sector_operators(const EigenSystem& es) {
  const std::array<ComplexMatrix, 2> a = {
      tensor_product(identity(2), pauli_x()),
      tensor_product(identity(2), pauli_y())};
  SectorOperators s;
  for (int k = 0; k < 2; ++k) {
    s.eps1[k] = sector(es, a[k], {{0, 1}, {2, 3}});
    s.minus_eps1[k] = sector(es, a[k], {{1, 0}, {3, 2}});
    s.eps2[k] = sector(es, a[k], {{0, 2}, {1, 3}});
    s.minus_eps2[k] = sector(es, a[k], {{2, 0}, {3, 1}});
    s.omega03[k] = sector(es, a[k], {{0, 3}, {3, 0}});
    s.omega12[k] = sector(es, a[k], {{1, 2}, {2, 1}});
    s.diagonal[k] = sector(es, a[k], {{0, 0}, {1, 1}, {2, 2}, {3, 3}});
  }
  return s;
}

// ---------------------------------------------------------------------------

GKSLGenerator::GKSLGenerator(HermitianOperator hamiltonian,
                             std::vector<LindbladChannel> channels)
    : h_(std::move(hamiltonian)), channels_(std::move(channels)) {
  const Eigen::Index n = h_.dim();
  for (const auto& c : channels_) {
    if (c.op.rows() != n || c.op.cols() != n) {
      throw DimensionError("GKSLGenerator: channel dimension mismatch");
    }
    if (!(c.rate >= 0.0) || !std::isfinite(c.rate)) {
      throw std::invalid_argument("GKSLGenerator: channel rates must be finite and >= 0");
    }
  }
  liouvillian_ = ComplexMatrix::Zero(n * n, n * n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      ComplexMatrix e = ComplexMatrix::Zero(n, n);
      e(i, j) = 1.0;
      liouvillian_.col(j * n + i) = vec(apply(e));
    }
  }
}

ComplexMatrix GKSLGenerator::apply(const ComplexMatrix& x) const {
  const ComplexMatrix& h = h_.matrix();
  ComplexMatrix out = -kI * (h * x - x * h);
  for (const auto& c : channels_) {
    if (c.rate == 0.0) continue;
    const ComplexMatrix ldl = c.op.adjoint() * c.op;
    out += c.rate * (c.op * x * c.op.adjoint() - 0.5 * (ldl * x + x * ldl));
  }
  return out;
}

GKSLGenerator build_generator(const ReservoirParams& p) {
  const EigenSystem es = analytic_eigensystem(p);
  const TransitionData td = transition_data(es, p);
  return GKSLGenerator(two_qubit_hamiltonian(p), lindblad_channels(es, td));
}

ComplexVector vec(const ComplexMatrix& x) {
  return Eigen::Map<const ComplexVector>(x.data(), x.size());
}

ComplexMatrix unvec(const ComplexVector& v, Eigen::Index dim) {
  if (v.size() != dim * dim) {
    throw DimensionError("unvec: vector length is not dim^2");
  }
  return Eigen::Map<const ComplexMatrix>(v.data(), dim, dim);
}

}  // namespace qotto
