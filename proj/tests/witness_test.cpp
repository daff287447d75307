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
#include <numbers>

#include "doctest.h"
#include "qotto/witness.hpp"

using namespace qotto;

namespace {

// Upper bound on |dD/dt| from the generator: for X = rho1 - rho2 with
// ||X||_1 <= 2, ||L X||_1 <= (2 ||H|| + sum_k 2 g_k ||L_k||^2) ||X||_1 and
// D is half the trace norm, so |dD/dt| <= 2 ||H|| + 2 sum_k g_k ||L_k||^2.
double derivative_bound(const ReservoirParams& p) {
  const EigenDecomposition eh = hermitian_eig(two_qubit_hamiltonian(p));
  double b = 2.0 * eh.values.cwiseAbs().maxCoeff();
  const EigenSystem es = analytic_eigensystem(p);
  for (const LindbladChannel& c : lindblad_channels(es, transition_data(es, p))) {
    const double norm = Eigen::JacobiSVD<ComplexMatrix>(c.op).singularValues()(0);
    b += 2.0 * c.rate * norm * norm;
  }
  return b;
}

}  // namespace

TEST_CASE("standard configuration") {
  const WitnessConfig c = WitnessConfig::standard(10.0);
  CHECK(c.params.omega_s == doctest::Approx(2 * std::numbers::pi * 2200.0));
  CHECK(c.params.omega_a == c.params.omega_s);
  CHECK(c.params.J == doctest::Approx(200.0));
  CHECK(c.params.beta * c.params.omega_a == doctest::Approx(0.5));
  CHECK(c.t_max == 0.3);
  CHECK_NOTHROW(c.validate());

  WitnessConfig bad = c;
  bad.grid_step = 0.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = c;
  bad.psi1 = 2.0 * basis_ket(2, 0);
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("trace distance trajectory") {
  for (double jk : {0.5, 10.0, 40.0}) {
    const WitnessReport r = trace_distance_trajectory(WitnessConfig::standard(jk));
    CAPTURE(jk);
    REQUIRE(r.times.size() == 3001);
    CHECK(r.times.back() == 0.3);
    CHECK(r.D.front() == doctest::Approx(1.0).epsilon(1e-14));
    for (double d : r.D) {
      REQUIRE(d >= 0.0);
      REQUIRE(d <= 1.0 + 1e-12);
    }
    CHECK(r.is_non_markovian == (r.max_positive_derivative > r.positivity_tolerance));
    const double bound = derivative_bound(WitnessConfig::standard(jk).params);
    for (double d : r.dDdt) REQUIRE(std::abs(d) <= bound);
  }
}

TEST_CASE("strong coupling is non-Markovian") {
  const WitnessReport r10 = trace_distance_trajectory(WitnessConfig::standard(10.0));
  const WitnessReport r40 = trace_distance_trajectory(WitnessConfig::standard(40.0));
  CHECK(r10.is_non_markovian);
  CHECK(r40.is_non_markovian);
  CHECK(blp_accumulator(r40) > blp_accumulator(r10));
  CHECK(blp_accumulator(r10) > 0.0);
}

TEST_CASE("weak coupling: no appreciable revival") {
  // Growth, if any, stays at the level of the secular residue; the strict
  // 1e-6 /s verdict is exercised by the acceptance run.
  const WitnessReport r = trace_distance_trajectory(WitnessConfig::standard(0.5));
  CHECK(r.max_positive_derivative < 1e-4);
  double running_min = r.D.front();
  for (double d : r.D) {
    REQUIRE(d <= running_min + 1e-6);
    running_min = std::min(running_min, d);
  }
}

TEST_CASE("verdict survives grid refinement") {
  for (double jk : {0.5, 10.0, 40.0}) {
    WitnessConfig c = WitnessConfig::standard(jk);
    const bool coarse = trace_distance_trajectory(c).is_non_markovian;
    c.grid_step /= 2;
    CAPTURE(jk);
    CHECK(trace_distance_trajectory(c).is_non_markovian == coarse);
  }
}

TEST_CASE("verdict under other auxiliary preparations") {
  for (double jk : {10.0, 40.0}) {
    for (int prep = 0; prep < 2; ++prep) {
      WitnessConfig c = WitnessConfig::standard(jk);
      c.aux_init = prep == 0 ? DensityMatrix::maximally_mixed(2)
                             : DensityMatrix::pure(basis_ket(2, 1));
      CHECK(trace_distance_trajectory(c).is_non_markovian);
    }
  }
}

TEST_CASE("swapping the pair leaves D unchanged") {
  WitnessConfig c = WitnessConfig::standard(10.0);
  c.t_max = 0.05;
  c.psi1 = bloch_ket(hemisphere_point(7, 20));
  c.psi2 = bloch_ket(-hemisphere_point(7, 20));
  const WitnessReport a = trace_distance_trajectory(c);
  std::swap(c.psi1, c.psi2);
  const WitnessReport b = trace_distance_trajectory(c);
  for (std::size_t k = 0; k < a.D.size(); ++k) REQUIRE(a.D[k] == doctest::Approx(b.D[k]).epsilon(1e-13));
  CHECK(a.max_positive_derivative == doctest::Approx(b.max_positive_derivative).epsilon(1e-9));
}

TEST_CASE("single-pair scan is the basis-state witness") {
  for (double jk : {0.5, 40.0}) {
    const WitnessConfig c = WitnessConfig::standard(jk);
    const WitnessReport r = trace_distance_trajectory(c);
    const PairScanReport s = pair_scan(c.params, 1, c.t_max);
    REQUIRE(s.pairs.size() == 1);
    CHECK(s.pairs[0].bloch.z() == 1.0);
    CHECK(s.max_positive_derivative == doctest::Approx(r.max_positive_derivative).epsilon(1e-9));
    CHECK(s.is_non_markovian == r.is_non_markovian);
    CHECK(s.pairs[0].blp == doctest::Approx(blp_accumulator(r)).epsilon(1e-9));
  }
}

TEST_CASE("pair scan aggregation and parallel determinism") {
  const ReservoirParams p = WitnessConfig::standard(10.0).params;
  PairScanOptions one;
  PairScanOptions four;
  four.jobs = 4;
  const PairScanReport a = pair_scan(p, 24, 0.05, one);
  const PairScanReport b = pair_scan(p, 24, 0.05, four);
  REQUIRE(a.pairs.size() == 24);
  for (std::size_t i = 0; i < a.pairs.size(); ++i) {
    REQUIRE(a.pairs[i].max_positive_derivative == b.pairs[i].max_positive_derivative);
    REQUIRE(a.pairs[i].blp == b.pairs[i].blp);
    REQUIRE(a.pairs[i].max_positive_derivative <= a.max_positive_derivative);
  }
  CHECK(a.max_positive_derivative == a.pairs[a.worst_pair].max_positive_derivative);
  CHECK(a.worst_pair == b.worst_pair);
  CHECK(a.is_non_markovian);
  CHECK_THROWS_AS(pair_scan(p, 0, 0.05), std::invalid_argument);
}

TEST_CASE("hemisphere grid") {
  const int n = 1000;
  for (int k = 0; k < n; ++k) {
    const Eigen::Vector3d r = hemisphere_point(k, n);
    REQUIRE(r.norm() == doctest::Approx(1.0).epsilon(1e-14));
    REQUIRE(r.z() > 0.0);
    REQUIRE(r.z() == doctest::Approx(1.0 - double(k) / n).epsilon(1e-14));
    // The ket reproduces the Bloch vector; its antipode is orthogonal.
    const DensityMatrix rho = DensityMatrix::pure(bloch_ket(r));
    REQUIRE(expectation(rho, HermitianOperator(pauli_x())) == doctest::Approx(r.x()).epsilon(1e-12).scale(1.0));
    REQUIRE(expectation(rho, HermitianOperator(pauli_y())) == doctest::Approx(r.y()).epsilon(1e-12).scale(1.0));
    REQUIRE(expectation(rho, HermitianOperator(pauli_z())) == doctest::Approx(r.z()).epsilon(1e-12).scale(1.0));
    REQUIRE(std::abs(bloch_ket(-r).dot(bloch_ket(r))) < 1e-12);
  }
  CHECK(hemisphere_point(0, 1) == Eigen::Vector3d(0, 0, 1));
  CHECK_THROWS_AS(hemisphere_point(5, 5), std::invalid_argument);
  CHECK_THROWS_AS(hemisphere_point(0, 0), std::invalid_argument);

  // Equal-area bands: the mean of z over the grid approaches 1/2.
  double zsum = 0.0;
  for (int k = 0; k < n; ++k) zsum += hemisphere_point(k, n).z();
  CHECK(zsum / n == doctest::Approx(0.5).epsilon(1e-3));
}

TEST_CASE("sampled derivative") {
  const std::vector<double> t = {0.0, 0.1, 0.35, 0.4, 1.0};
  std::vector<double> y;
  for (double s : t) y.push_back(3.0 * s - 1.0);
  for (double d : sampled_derivative(t, y)) CHECK(d == doctest::Approx(3.0));

  std::vector<double> u, q;
  for (int k = 0; k <= 10; ++k) {
    u.push_back(0.1 * k);
    q.push_back(u.back() * u.back());
  }
  const std::vector<double> dq = sampled_derivative(u, q);
  for (int k = 1; k < 10; ++k) CHECK(dq[k] == doctest::Approx(2.0 * u[k]));
  CHECK(sampled_derivative({0.0}, {1.0}) == std::vector<double>{0.0});
  CHECK_THROWS_AS(sampled_derivative({0.0, 1.0}, {1.0}), std::invalid_argument);
}

TEST_CASE("BLP accumulator") {
  WitnessReport r;
  r.positivity_tolerance = 1e-6;
  const double s = 0.25;
  for (int k = 0; k <= 10; ++k) {
    r.times.push_back(0.1 * k);
    r.D.push_back(0.5 + s * 0.1 * k);
    r.dDdt.push_back(s);
  }
  r.max_positive_derivative = s;
  r.is_non_markovian = true;
  CHECK(blp_accumulator(r) == doctest::Approx(s * 1.0).epsilon(1e-14));

  // Below-tolerance samples do not count.
  for (double& d : r.dDdt) d = 5e-7;
  r.max_positive_derivative = 5e-7;
  r.is_non_markovian = false;
  CHECK(blp_accumulator(r) == 0.0);

  for (double& d : r.dDdt) d = -1.0;
  CHECK(blp_accumulator(r) == 0.0);
}
