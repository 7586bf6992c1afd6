// Copyright 2026 The hct Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Shared fixtures for the hct test suite: seeded random element generators
// and residual helpers.  All randomness is mt19937_64 with per-file fixed
// seeds so failures reproduce exactly.

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

#include "hct/core.hpp"
#include "hct/hyperbolic.hpp"
#include "hct/realization.hpp"

namespace hct::testing {

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// A random element with coordinates in [-amp, amp].
inline Hypercomplex random_element(std::mt19937_64& rng, Scale scale,
                                   double amp = 2.0) {
  return {cplx(uniform(rng, -amp, amp), uniform(rng, -amp, amp)),
          cplx(uniform(rng, -amp, amp), uniform(rng, -amp, amp)), scale};
}

/// A random subring element with coordinates in [-amp, amp].
inline Hyperbolic random_pair(std::mt19937_64& rng, Scale scale,
                              double amp = 2.0) {
  return {uniform(rng, -amp, amp), uniform(rng, -amp, amp), scale};
}

/// Largest entrywise difference between two matrices.
inline double diff_max(const Realization2& m1, const Realization2& m2) {
  return max_abs(msub(m1, m2));
}

/// Largest coordinate difference between two elements.
inline double diff_max(const Hypercomplex& h1, const Hypercomplex& h2) {
  return std::max(std::abs(h1.a - h2.a), std::abs(h1.b - h2.b));
}

inline double diff_max(const Hyperbolic& w1, const Hyperbolic& w2) {
  return std::max(std::abs(w1.x - w2.x), std::abs(w1.y - w2.y));
}

/// Unordered-pair distance: the better of the two pairings.
inline double pair_distance(const std::array<cplx, 2>& p,
                            const std::array<cplx, 2>& q) {
  const double straight =
      std::max(std::abs(p[0] - q[0]), std::abs(p[1] - q[1]));
  const double crossed =
      std::max(std::abs(p[0] - q[1]), std::abs(p[1] - q[0]));
  return std::min(straight, crossed);
}

/// The scale grid covering all three regimes, used by cross-regime loops.
inline constexpr std::array<double, 7> kScaleGrid = {-2.0, -1.0, -0.5, 0.0,
                                                     0.5,  1.0,  3.0};

/// Pi, for angle grids.
inline constexpr double kTestPi = 3.14159265358979323846;

}  // namespace hct::testing
