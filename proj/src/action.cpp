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

#include "hct/action.hpp"

#include <cmath>

namespace hct {

double det(const RealMatrix2& m) { return m.a11 * m.a22 - m.a12 * m.a21; }

RealMatrix2 matmul(const RealMatrix2& m1, const RealMatrix2& m2) {
  return {m1.a11 * m2.a11 + m1.a12 * m2.a21,
          m1.a11 * m2.a12 + m1.a12 * m2.a22,
          m1.a21 * m2.a11 + m1.a22 * m2.a21,
          m1.a21 * m2.a12 + m1.a22 * m2.a22};
}

Hyperbolic act(const RealMatrix2& A, const Hyperbolic& w) {
  return {A.a11 * w.x + A.a12 * w.y, A.a21 * w.x + A.a22 * w.y, w.scale};
}

bool image_invertible(const RealMatrix2& A, const Hyperbolic& w) {
  return !is_singular(embed(act(A, w)));
}

namespace {

double max_entry_abs(const RealMatrix2& A) {
  return std::max(std::max(std::abs(A.a11), std::abs(A.a12)),
                  std::max(std::abs(A.a21), std::abs(A.a22)));
}

bool same_line(const SlopeLine& l1, const SlopeLine& l2) {
  if (l1.vertical != l2.vertical) return false;
  return l1.vertical || l1.slope == l2.slope;
}

}  // namespace

SingularDirections singular_directions(const RealMatrix2& A, Scale scale) {
  SingularDirections out{SingularDirections::Regime::LinePair, {}};
  const double t = scale.t();

  if (scale.regime() == Regime::Negative) {
    // The null cone is the origin, so no line of directions maps onto it;
    // a non-invertible image occurs exactly on ker(A), nonzero only when
    // the matrix itself is singular.
    const double scale_sq = 1.0 + max_entry_abs(A) * max_entry_abs(A);
    if (std::abs(det(A)) <= kSingularEps * scale_sq)
      out.regime = SingularDirections::Regime::WholeSpaceIfSingularMatrix;
    return out;
  }

  // The image (X, Y) is on the null cone iff X = s*sqrt(t)*Y for a sign s,
  // i.e. (a11 - s sqrt(t) a21) x + (a12 - s sqrt(t) a22) y = 0.
  const double st = std::sqrt(t);
  const double eps = kZeroComponentEps * (1.0 + (1.0 + st) * max_entry_abs(A));
  for (double s : {1.0, -1.0}) {
    const double cx = A.a11 - s * st * A.a21;
    const double cy = A.a12 - s * st * A.a22;
    if (std::abs(cy) > eps) {
      out.lines.push_back({false, -cx / cy});
    } else if (std::abs(cx) > eps) {
      out.lines.push_back({true, 0.0});
    } else {
      // Both coefficients vanish: every direction lands on this family's
      // half of the cone (possible only for a singular matrix whose first
      // row is s*sqrt(t) times its second).
      out.regime = SingularDirections::Regime::WholeSpaceIfSingularMatrix;
    }
    if (t == 0.0) break;  // both families coincide at t = 0
  }
  if (out.lines.size() == 2 && same_line(out.lines[0], out.lines[1]))
    out.lines.pop_back();
  return out;
}

SpectralValue image_spectral_value(const RealMatrix2& A, const Hyperbolic& w) {
  return spectralize(embed(act(A, w)));
}

}  // namespace hct
