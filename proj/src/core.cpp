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

#include "hct/core.hpp"

#include <cmath>

namespace hct {

Hypercomplex add(const Hypercomplex& h1, const Hypercomplex& h2) {
  detail::require_same_scale(h1, h2, "add");
  return {h1.a + h2.a, h1.b + h2.b, h1.scale};
}

Hypercomplex sub(const Hypercomplex& h1, const Hypercomplex& h2) {
  detail::require_same_scale(h1, h2, "sub");
  return {h1.a - h2.a, h1.b - h2.b, h1.scale};
}

Hypercomplex neg(const Hypercomplex& h) { return {-h.a, -h.b, h.scale}; }

Hypercomplex scale_by(double r, const Hypercomplex& h) {
  return {r * h.a, r * h.b, h.scale};
}

Hypercomplex mul(const Hypercomplex& h1, const Hypercomplex& h2) {
  detail::require_same_scale(h1, h2, "mul");
  const double t = h1.scale.t();
  return {h1.a * h2.a + t * h1.b * std::conj(h2.b),
          h1.a * h2.b + h1.b * std::conj(h2.a), h1.scale};
}

Hypercomplex conjugate(const Hypercomplex& h) {
  return {std::conj(h.a), -h.b, h.scale};
}

double det(const Hypercomplex& h) {
  return std::norm(h.a) - h.scale.t() * std::norm(h.b);
}

bool is_singular(const Hypercomplex& h) {
  const double magnitude = 1.0 + std::norm(h.a) + std::norm(h.b);
  return std::abs(det(h)) <= kSingularEps * magnitude;
}

Hypercomplex inverse(const Hypercomplex& h) {
  if (is_singular(h)) {
    throw SingularElement("inverse: element has vanishing determinant");
  }
  const double d = det(h);
  return {std::conj(h.a) / d, -h.b / d, h.scale};
}

Classification classify(const Hypercomplex& h) {
  Classification c{};
  c.part = is_singular(h) ? Part::Singular : Part::Invertible;
  const double im_a = h.a.imag();
  c.spectral_side = (im_a * im_a > h.scale.t() * std::norm(h.b))
                        ? SpectralSide::Plus
                        : SpectralSide::MinusZero;
  return c;
}

double trace_tau(const Hypercomplex& h) { return h.a.real(); }

double form(const Hypercomplex& h1, const Hypercomplex& h2) {
  detail::require_same_scale(h1, h2, "form");
  const double t = h1.scale.t();
  // tau(h1 .t conj(h2)) collapses to Re(a1 conj(a2)) - t Re(b1 conj(b2)).
  // Taking the two real parts before the t-scaling keeps the value
  // bit-for-bit symmetric in (h1, h2); scaling b1 by t first would round
  // an intermediate that the swapped call never forms.
  return (h1.a * std::conj(h2.a)).real() -
         t * (h1.b * std::conj(h2.b)).real();
}

double seminorm(const Hypercomplex& h) { return std::sqrt(std::abs(det(h))); }

}  // namespace hct
