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


// Seeded reservoir parameter grid shared by the eigensystem and dissipator
// comparisons.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "qotto/reservoir.hpp"

namespace qotto::testing {

// Gaps drawn from 2pi x [1, 5] kHz, J/kappa from [0, 50], beta omega_s from
// [0.3, 5], kappa = 20 /s. Every tenth point is resonant (with J > 0, since
// the resonant decoupled eigenbasis is not unique) and points 5 mod 10 are
// decoupled.
inline std::vector<ReservoirParams> parameter_grid(int n, std::uint64_t seed) {
  constexpr double two_pi_khz = 2.0 * std::numbers::pi * 1e3;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> khz(1.0, 5.0);
  std::uniform_real_distribution<double> jk(0.0, 50.0);
  std::uniform_real_distribution<double> bw(0.3, 5.0);
  std::vector<ReservoirParams> out;
  for (int i = 0; i < n; ++i) {
    const double ws = two_pi_khz * khz(rng);
    const double wa = i % 10 == 0 ? ws : two_pi_khz * khz(rng);
    double ratio = jk(rng);
    if (i % 10 == 0) ratio = std::max(ratio, 0.1);
    if (i % 10 == 5) ratio = 0.0;
    out.push_back(ReservoirParams::from_ratio(ws, wa, ratio, 20.0, bw(rng) / ws));
  }
  return out;
}

}  // namespace qotto::testing
