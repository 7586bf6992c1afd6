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

#include <vector>

#include "hct/hyperbolic.hpp"
#include "hct/spectral.hpp"

namespace hct {

/// A real 2x2 matrix acting linearly on the coordinate plane of D_t.
struct RealMatrix2 {
  double a11, a12;
  double a21, a22;
};

double det(const RealMatrix2& m);
RealMatrix2 matmul(const RealMatrix2& m1, const RealMatrix2& m2);

/// The action A.(x, y) = (a11 x + a12 y, a21 x + a22 y), staying in D_t.
Hyperbolic act(const RealMatrix2& A, const Hyperbolic& w);

/// Whether the image of w under A is invertible in D_t, i.e. whether
/// (a11 x + a12 y)^2 - t (a21 x + a22 y)^2 is nonzero within the standard
/// singularity tolerance.
bool image_invertible(const RealMatrix2& A, const Hyperbolic& w);

/// One singular direction: either the line y = slope * x through the
/// origin, or the vertical axis x = 0.
struct SlopeLine {
  bool vertical;
  double slope;  // meaningful only when !vertical
};

/// The directions on which A maps D_t onto the null cone.
///
/// For t >= 0 these are (up to) two lines through the origin, one per sign
/// s in {+1, -1} of the null-cone equation X = s*sqrt(t)*Y applied to the
/// image:  (a11 - s sqrt(t) a21) x + (a12 - s sqrt(t) a22) y = 0.
/// A vanishing y-coefficient with nonzero x-coefficient gives the vertical
/// axis; both coefficients vanishing means every direction is singular for
/// that family (regime WholeSpaceIfSingularMatrix).  At t = 0 the two
/// families coincide and the duplicate is merged.
///
/// For t < 0 the null cone is the origin alone, so lines never exist:
/// the regime reports whether A itself is singular (only then does any
/// nonzero direction — the kernel — map to a non-invertible image).
struct SingularDirections {
  enum class Regime { WholeSpaceIfSingularMatrix, LinePair };

  Regime regime;
  std::vector<SlopeLine> lines;  // 0 to 2 entries
};

SingularDirections singular_directions(const RealMatrix2& A, Scale scale);

/// The t-spectral value of the image: sigma_t applied to A.(x, y) —
/// identical to spectralize(embed(act(A, w))), provided as a convenience
/// so callers get the image and its spectral data in one step.
SpectralValue image_spectral_value(const RealMatrix2& A, const Hyperbolic& w);

}  // namespace hct
