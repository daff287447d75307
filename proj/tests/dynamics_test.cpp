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


#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "doctest.h"
#include "qotto/dynamics.hpp"
#include "support/random.hpp"

using namespace qotto;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kKappa = 20.0;

ReservoirParams standard_params(double jk, double beta_omega = 2.5) {
  const double w = kTwoPi * 2200.0;
  return ReservoirParams::from_ratio(w, w, jk, kKappa, beta_omega / w);
}

DensityMatrix reduced_s(const DensityMatrix& rho) {
  return partial_trace(rho, Subsystem::S);
}

}  // namespace

TEST_CASE("zero duration returns the initial state") {
  std::mt19937_64 rng(41);
  const GKSLGenerator gen = build_generator(standard_params(10.0));
  const DensityMatrix rho = qotto::testing::random_state(rng, 4);
  const Trajectory t = propagate_gksl(rho, gen, 0.0, 1e-3);
  REQUIRE(t.times.size() == 1);
  CHECK(t.times[0] == 0.0);
  CHECK(t.states[0].matrix() == rho.matrix());
  CHECK(GKSLPropagator(gen).evolve(rho, 0.0).matrix() == rho.matrix());
}

TEST_CASE("sample times") {
  const GKSLPropagator prop(build_generator(standard_params(0.5)));
  SUBCASE("exact multiple") {
    const SampleSchedule s = make_schedule(prop, 0.3, 1e-4);
    REQUIRE(s.times.size() == 3001);
    CHECK(s.times.back() == 0.3);
    for (std::size_t k = 1; k < s.times.size(); ++k) REQUIRE(s.times[k] > s.times[k - 1]);
  }
  SUBCASE("ragged end") {
    const SampleSchedule s = make_schedule(prop, 0.00125, 1e-3);
    REQUIRE(s.times.size() == 3);
    CHECK(s.times[1] == 1e-3);
    CHECK(s.times[2] == 0.00125);
    CHECK(max_abs_diff(s.last, prop.superoperator(0.00025)) < 1e-12);
  }
  SUBCASE("sample step shorter than the integrator step") {
    const SampleSchedule s = make_schedule(prop, 1e-4, 2.5e-5);
    CHECK(s.times.size() == 5);
    CHECK(max_abs_diff(s.per_sample, prop.superoperator(2.5e-5)) < 1e-12);
  }
  SUBCASE("bad input") {
    CHECK_THROWS_AS(make_schedule(prop, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(make_schedule(prop, -1.0, 1e-3), std::invalid_argument);
    CHECK_THROWS_AS(make_schedule(prop, 1.0, std::nan("")), std::invalid_argument);
  }
}

TEST_CASE("sub-stepped samples match a single exponential") {
  std::mt19937_64 rng(42);
  const GKSLGenerator gen = build_generator(standard_params(40.0));
  const GKSLPropagator prop(gen);
  const DensityMatrix rho = qotto::testing::random_state(rng, 4);
  const Trajectory t = propagate_gksl(rho, prop, 0.05, 1e-2);
  for (std::size_t k = 0; k < t.times.size(); ++k) {
    const DensityMatrix direct = prop.evolve(rho, t.times[k]);
    REQUIRE(max_abs_diff(t.states[k].matrix(), direct.matrix()) <= 1e-10);
  }
}

TEST_CASE("decoupled propagation freezes a diagonal refrigerant state") {
  std::mt19937_64 rng(43);
  const GKSLGenerator gen = build_generator(standard_params(0.0));
  for (int n = 0; n < 10; ++n) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double q = u(rng);
    RealVector pops(2);
    pops << q, 1.0 - q;
    const DensityMatrix s0 = DensityMatrix::diagonal(pops);
    const DensityMatrix rho(tensor_product(s0.matrix(),
                                           qotto::testing::random_state(rng, 2).matrix()));
    const Trajectory t = propagate_gksl(rho, gen, 0.2, 1e-3);
    for (const DensityMatrix& st : t.states) {
      REQUIRE(max_abs_diff(reduced_s(st).matrix(), s0.matrix()) <= 1e-9);
    }
  }
}

TEST_CASE("relaxation to the Gibbs state") {
  std::mt19937_64 rng(44);
  for (double jk : {0.5, 10.0, 40.0}) {
    const ReservoirParams p = standard_params(jk);
    const GKSLPropagator prop(build_generator(p));
    const DensityMatrix g = gibbs_state(two_qubit_hamiltonian(p), p.beta);
    for (int n = 0; n < 10; ++n) {
      const DensityMatrix rho = qotto::testing::random_state(rng, 4);
      const Trajectory t = propagate_gksl(rho, prop, 50.0 / kKappa, 0.1);
      CAPTURE(jk);
      REQUIRE(t.times.back() == 50.0 / kKappa);
      REQUIRE(trace_distance(t.states.back(), g) < 1e-6);
    }
  }
}

TEST_CASE("zero temperature relaxes to the ground state") {
  std::mt19937_64 rng(45);
  for (double jk : {0.5, 10.0}) {
    const ReservoirParams p = standard_params(jk, std::numeric_limits<double>::infinity());
    const GKSLPropagator prop(build_generator(p));
    const ComplexVector e0 = analytic_eigensystem(p).ket(0);
    const DensityMatrix ground = DensityMatrix::pure(e0);
    const DensityMatrix rho = qotto::testing::random_state(rng, 4);
    CHECK(trace_distance(prop.evolve(rho, 100.0 / kKappa), ground) < 1e-6);
  }
}

TEST_CASE("divisibility") {
  std::mt19937_64 rng(46);
  std::uniform_real_distribution<double> u(0.0, 0.05);
  for (double jk : {0.5, 10.0, 40.0}) {
    const GKSLPropagator prop(build_generator(standard_params(jk)));
    for (int n = 0; n < 10; ++n) {
      const DensityMatrix rho = qotto::testing::random_state(rng, 4);
      const double a = u(rng), b = u(rng);
      const DensityMatrix two = prop.evolve(prop.evolve(rho, a), b);
      const DensityMatrix one = prop.evolve(rho, a + b);
      REQUIRE(max_abs_diff(two.matrix(), one.matrix()) <= 1e-10);
    }
  }
}

TEST_CASE("Hermiticity and trace along trajectories") {
  std::mt19937_64 rng(47);
  for (double jk : {0.5, 40.0}) {
    const GKSLGenerator gen = build_generator(standard_params(jk));
    const DensityMatrix rho = qotto::testing::random_state(rng, 4);
    const SampleSchedule s = make_schedule(GKSLPropagator(gen), 0.1, 1e-4);
    ComplexVector v = vec(rho.matrix());
    double prev_trace = 1.0;
    for (std::size_t k = 1; k < s.times.size(); ++k) {
      v = s.advance(k) * v;
      const ComplexMatrix m = unvec(v, 4);
      const double tr = m.trace().real();
      REQUIRE(std::abs(tr - prev_trace) < 1e-10);
      REQUIRE(std::abs(m.trace().imag()) < 1e-10);
      REQUIRE(max_abs_diff(m, m.adjoint()) < 1e-10);
      prev_trace = tr;
    }
    CHECK(std::abs(prev_trace - 1.0) < 1e-10);
  }
}

TEST_CASE("loss of positivity aborts with the time") {
  // A mildly non-positive start is carried unchanged by unitary evolution
  // and must be rejected at the first sample.
  RealVector pops(4);
  pops << 0.6, 0.3, 0.1 + 1e-3, -1e-3;
  DensityTolerances lax;
  lax.positivity = 1e-2;
  const DensityMatrix bad(pops.cast<Complex>().asDiagonal().toDenseMatrix(), lax);
  const GKSLGenerator gen(two_qubit_hamiltonian(ReservoirParams{1.0, 1.0, 0.2, 1.0, 1.0}), {});
  try {
    propagate_gksl(bad, gen, 1.0, 0.5);
    FAIL("expected NumericalError");
  } catch (const NumericalError& e) {
    CHECK(std::string(e.what()).find("t = 0.5") != std::string::npos);
  }
}

TEST_CASE("ramp propagator") {
  const double w0 = kTwoPi * 3600.0, wt = kTwoPi * 2200.0, tau = 7.5e-4;
  const RampSpec ramp{w0, wt, tau};
  CHECK(ramp_phase(ramp) == doctest::Approx(kTwoPi * 2900.0 * 7.5e-4).epsilon(1e-14));
  CHECK(ramp_phase(RampSpec{5.0, 5.0, 2.0}) == doctest::Approx(10.0));

  // Numerical integral of the drive over the ramp.
  double integral = 0.0;
  const int n = 10000;
  for (int k = 0; k < n; ++k) {
    const double t = (k + 0.5) * tau / n;
    integral += (w0 + (wt - w0) * t / tau) * tau / n;
  }
  CHECK(ramp_phase(ramp) == doctest::Approx(integral).epsilon(1e-12));

  const ComplexMatrix u = ramp_propagator(ramp);
  CHECK(max_abs_diff(u * u.adjoint(), identity(2)) < 1e-15);
  CHECK(u(0, 1) == Complex(0.0));
  CHECK(u(1, 0) == Complex(0.0));
  CHECK(max_abs_diff(u * pauli_z(), pauli_z() * u) < 1e-15);

  // Static drive: same as exp(-i H t).
  const RampSpec flat{w0, w0, tau};
  CHECK(max_abs_diff(ramp_propagator(flat),
                     matrix_exp_hermitian_prop(qubit_hamiltonian(w0), tau)) < 1e-12);

  std::mt19937_64 rng(48);
  for (int k = 0; k < 50; ++k) {
    const DensityMatrix rho = qotto::testing::random_state(rng, 2);
    const DensityMatrix out = apply_unitary(rho, u);
    REQUIRE(std::abs(out.matrix()(0, 0) - rho.matrix()(0, 0)) < 1e-15);
    REQUIRE(std::abs(expectation(out, HermitianOperator(pauli_z())) -
                     expectation(rho, HermitianOperator(pauli_z()))) < 1e-15);
    REQUIRE(std::abs(std::abs(out.matrix()(0, 1)) - std::abs(rho.matrix()(0, 1))) < 1e-15);
  }

  CHECK_THROWS_AS(ramp_propagator(RampSpec{0.0, 1.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(ramp_propagator(RampSpec{1.0, 1.0, 0.0}), std::invalid_argument);
}

TEST_CASE("thermal reset") {
  const double w0 = kTwoPi * 3600.0, beta = 2.5 / w0;
  const HermitianOperator h = qubit_hamiltonian(w0);
  const DensityMatrix r = thermal_reset(h, beta);
  const double z = std::exp(-1.25) + std::exp(1.25);
  CHECK(r.matrix()(0, 0).real() == doctest::Approx(std::exp(-1.25) / z).epsilon(1e-14));
  CHECK(r.matrix()(1, 1).real() == doctest::Approx(std::exp(1.25) / z).epsilon(1e-14));
  CHECK(std::abs(r.matrix()(0, 1)) == 0.0);

  const DensityMatrix again = thermal_reset(h, beta);
  CHECK(again.matrix() == r.matrix());

  // S = beta U - beta F with F = -ln Z / beta.
  const double u = expectation(r, h);
  const double f = -std::log(z) / beta;
  CHECK(von_neumann_entropy(r) == doctest::Approx(beta * u - beta * f).epsilon(1e-12));

  CHECK_THROWS_AS(thermal_reset(h, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(thermal_reset(h, -1.0), std::invalid_argument);
}
