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

#include "hct/core.hpp"

namespace hct {

/// One element x + y*j_t of the t-scaled hyperbolic subring
/// D_t = {(x, y) in H_t : x, y real}, where j_t = (0, 1) and j_t^2 = t.
/// D_{-1} is isomorphic to C, D_0 behaves like the dual numbers, and D_1
/// is the classical hyperbolic (split-complex) numbers.
struct Hyperbolic {
  double x;
  double y;
  Scale scale;
};

/// Embed (x, y) as the hypercomplex element (x + 0i, y + 0i).
Hypercomplex embed(const Hyperbolic& w);

/// Inverse of embed.  Throws NotInRealization when h has imaginary parts
/// beyond kZeroComponentEps * (1 + |h|) — i.e. is not in the subring.
Hyperbolic project(const Hypercomplex& h);

/// Componentwise sum / difference / negation / real scaling.
/// Binary operations throw ScaleMismatch.
Hyperbolic hadd(const Hyperbolic& w1, const Hyperbolic& w2);
Hyperbolic hsub(const Hyperbolic& w1, const Hyperbolic& w2);
Hyperbolic hneg(const Hyperbolic& w);
Hyperbolic hscale(double r, const Hyperbolic& w);

/// The restriction of the t-product to real pairs:
/// (x1, y1)(x2, y2) = (x1*x2 + t*y1*y2, x1*y2 + y1*x2).  Commutative.
/// Throws ScaleMismatch.
Hyperbolic hmul(const Hyperbolic& w1, const Hyperbolic& w2);

/// det restricted to the subring: x^2 - t*y^2.
double hdet(const Hyperbolic& w);

/// Semi-norm sqrt(|x^2 - t*y^2|).
double hseminorm(const Hyperbolic& w);

/// The imaginary-like unit j_t = (0, 1).
Hyperbolic jt(Scale scale);

/// j_t^n for n >= 1: (t^(n/2), 0) for even n, (0, t^((n-1)/2)) for odd n.
/// At t = 0 this is nilpotent: j_0^n = 0 for n >= 2.
/// Throws std::invalid_argument for n < 1.
Hyperbolic jt_power(int n, Scale scale);

/// Partial sum of the exponential series e^{j_t theta} = sum (j_t theta)^n/n!
/// over the first `terms` terms (n = 0 .. terms-1).  The even-index terms
/// build the first component, the odd-index terms (starting at n = 1) the
/// second.  Throws std::invalid_argument for terms < 1.
Hyperbolic exp_jt_series(double theta, Scale scale, int terms);

/// Closed form of the scaled exponential:
///   t > 0: (cosh(sqrt(t) theta),  sinh(sqrt(t) theta)/sqrt(t))
///   t < 0: (cos(sqrt(-t) theta),  sin(sqrt(-t) theta)/sqrt(-t))
///   t = 0: (1, theta)                  (forced by the nilpotency of j_0)
/// Always lies on the unit set: |x^2 - t*y^2| = 1.
Hyperbolic exp_jt(double theta, Scale scale);

/// Membership in the unit set T_t = {w in D_t : ||w||_t = 1}:
/// | |x^2 - t*y^2| - 1 | <= tol.
bool unit_set_membership(const Hyperbolic& w, double tol = kPredicateTol);

/// Which parameterized piece of T_t a sampled point came from.
///   t < 0: Upper / Lower           (y = +/- sqrt((1 - x^2)/|t|))
///   t = 0: LinePos / LineNeg       (the vertical lines x = +1 / x = -1)
///   t > 0: PlusUpper / PlusLower   (x^2 - t y^2 = +1, y = +/-)
///          MinusUpper / MinusLower (x^2 - t y^2 = -1, y = +/-)
enum class UnitBranch {
  Upper,
  Lower,
  LinePos,
  LineNeg,
  PlusUpper,
  PlusLower,
  MinusUpper,
  MinusLower,
};

const char* to_string(UnitBranch b);

struct UnitSample {
  Hyperbolic point;
  UnitBranch branch;
};

/// A closed parameter interval.
struct Interval {
  double lo;
  double hi;
};

/// Deterministically sample `count` points of T_t with parameters in
/// `range` (x for t != 0, y for t = 0; clipped to [-1, 1] when t < 0).
/// The count is distributed across the regime's branches; every returned
/// point satisfies unit_set_membership.  Throws EmptyRange when the
/// (clipped) range is empty and std::invalid_argument for count < 1.
std::vector<UnitSample> sample_unit_set(Scale scale, int count,
                                        Interval range);

/// The four sector units of the polar decomposition: 1, -1, j_t/sqrt(t),
/// -j_t/sqrt(t).  Only PosReal occurs for t < 0; the imaginary-like
/// sectors exist only for t > 0.
enum class Sector { PosReal, NegReal, PosImag, NegImag };

const char* to_string(Sector s);

/// Polar data: w = sector_unit .t (radius * e^{j_t angle}).
struct PolarDecomposition {
  double radius;  // the semi-norm of the input, >= 0
  double angle;   // in [0, 2*pi/sqrt(|t|)) for t < 0; unbounded for t >= 0
  Sector sector;
};

/// Decompose an off-null-cone element:
///   t < 0: radius = sqrt(x^2 + |t| y^2), angle = atan2(sqrt(|t|) y, x)/sqrt(|t|),
///          sector PosReal (every nonzero element decomposes).
///   t = 0: radius = |x|, angle = y/x, sector by the sign of x.
///   t > 0: the dominant coordinate (|x| vs sqrt(t)|y|) and its sign pick
///          the sector; angle = artanh(sqrt(t) y/x)/sqrt(t) on the real
///          sectors and artanh(x/(sqrt(t) y))/sqrt(t) on the imaginary ones.
/// Throws NullCone when |x^2 - t y^2| is negligible (which covers the zero
/// element and, at t = 0, the axis x = 0).
PolarDecomposition polar_decompose(const Hyperbolic& w);

/// The unit element of a sector.  Throws std::invalid_argument for the
/// imaginary sectors when t <= 0.
Hyperbolic sector_unit(Sector s, Scale scale);

/// Rebuild sector_unit .t (radius * e^{j_t angle}); inverse of
/// polar_decompose up to rounding.
Hyperbolic recompose(const PolarDecomposition& p, Scale scale);

}  // namespace hct
