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

#include <cmath>
#include <stdexcept>

namespace hct {

/// Sign regime of the scale parameter t.  The regime decides the character
/// of the whole ring: t < 0 gives a noncommutative field (t = -1 is the
/// quaternions), t = 0 a ring with nilpotent-like directions, t > 0 a ring
/// with zero divisors (t = 1 is the split-quaternions).
enum class Regime { Negative, Zero, Positive };

/// The scale parameter t of the ring H_t.  A plain finite real; the regime
/// is determined exactly by sign(t), no tolerance involved (t is an input,
/// never a computed quantity).
class Scale {
 public:
  explicit Scale(double t) : t_(t) {
    if (!std::isfinite(t)) {
      throw std::invalid_argument("Scale: t must be finite");
    }
  }

  double t() const noexcept { return t_; }

  Regime regime() const noexcept {
    if (t_ < 0.0) return Regime::Negative;
    if (t_ > 0.0) return Regime::Positive;
    return Regime::Zero;
  }

 private:
  double t_;
};

/// Scales compare exactly (IEEE ==); elements over different scales never
/// interoperate.  NaN is excluded at construction, so == is an equivalence.
inline bool operator==(Scale lhs, Scale rhs) noexcept {
  return lhs.t() == rhs.t();
}

inline bool operator!=(Scale lhs, Scale rhs) noexcept { return !(lhs == rhs); }

}  // namespace hct
