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

#include <complex>
#include <string>

#include "hct/errors.hpp"
#include "hct/scale.hpp"
#include "hct/tolerances.hpp"

namespace hct {

using cplx = std::complex<double>;

/// One element (a, b) of the t-scaled hypercomplex ring H_t = (C^2, +, .t).
/// Multiplication is
///
///   (a1, b1) .t (a2, b2) = (a1*a2 + t*b1*conj(b2), a1*b2 + b1*conj(a2)),
///
/// so t = -1 reproduces the quaternions and t = +1 the split-quaternions.
/// Values are immutable; every operation below is pure.
struct Hypercomplex {
  cplx a;
  cplx b;
  Scale scale;
};

/// Group/semigroup part: H_t splits into the invertible elements (a group
/// under .t) and the singular ones (determinant zero, including (0,0)).
enum class Part { Invertible, Singular };

/// Spectral side: Plus when Im(a)^2 > t|b|^2 (two genuinely complex
/// conjugate spectral points), MinusZero otherwise.
enum class SpectralSide { Plus, MinusZero };

/// Joint classification of an element by both partitions of H_t.
struct Classification {
  Part part;
  SpectralSide spectral_side;
};

/// Componentwise complex sum.  Throws ScaleMismatch if the scales differ.
Hypercomplex add(const Hypercomplex& h1, const Hypercomplex& h2);

/// Componentwise complex difference.  Throws ScaleMismatch.
Hypercomplex sub(const Hypercomplex& h1, const Hypercomplex& h2);

/// Additive inverse.
Hypercomplex neg(const Hypercomplex& h);

/// Real scalar multiple r*h (the R-vector-space structure of H_t).
Hypercomplex scale_by(double r, const Hypercomplex& h);

/// The t-scaled product; unital with unity (1, 0), associative, and
/// noncommutative in general.  Throws ScaleMismatch.
Hypercomplex mul(const Hypercomplex& h1, const Hypercomplex& h2);

/// Hypercomplex conjugate (the dagger): (a, b) -> (conj(a), -b).  An
/// involutive anti-homomorphism: J(h1 .t h2) = J(h2) .t J(h1).
Hypercomplex conjugate(const Hypercomplex& h);

/// det(h) = |a|^2 - t|b|^2, which equals the determinant of the 2x2 matrix
/// realization of h.  Always real.
double det(const Hypercomplex& h);

/// True when |det(h)| <= kSingularEps * (1 + |a|^2 + |b|^2).  The zero
/// element is singular by this rule, matching its classification.
bool is_singular(const Hypercomplex& h);

/// Multiplicative inverse (conj(a)/d, -b/d) with d = det(h).
/// Throws SingularElement when is_singular(h).
Hypercomplex inverse(const Hypercomplex& h);

/// Classify h by invertibility and by spectral side.
Classification classify(const Hypercomplex& h);

/// The trace functional tau((a, b)) = Re(a); equals half the matrix trace
/// of the realization and the real part of the t-spectralization.
double trace_tau(const Hypercomplex& h);

/// The symmetric R-bilinear form <h1, h2> = tau(h1 .t conj(h2)), with the
/// closed form Re(a1*conj(a2) - t*b1*conj(b2)).  Definite for t < 0,
/// indefinite for t >= 0.  Throws ScaleMismatch.
double form(const Hypercomplex& h1, const Hypercomplex& h2);

/// Semi-norm sqrt(|<h, h>|) = sqrt(|det(h)|).  A true norm for t < 0; for
/// t >= 0 its kernel is the null cone |a|^2 = t|b|^2.
double seminorm(const Hypercomplex& h);

namespace detail {

/// Shared precondition check for binary operations.
inline void require_same_scale(const Hypercomplex& h1, const Hypercomplex& h2,
                               const char* op) {
  if (h1.scale != h2.scale) {
    throw ScaleMismatch(std::string(op) + ": operands live over different scales");
  }
}

}  // namespace detail

}  // namespace hct
