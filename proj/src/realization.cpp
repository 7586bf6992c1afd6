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

#include "hct/realization.hpp"

#include <algorithm>
#include <cmath>

namespace hct {

Realization2 identity2() { return {{cplx(1), cplx(0), cplx(0), cplx(1)}}; }

Realization2 realize(const Hypercomplex& h) {
  const double t = h.scale.t();
  return {{h.a, t * h.b, std::conj(h.b), std::conj(h.a)}};
}

Hypercomplex unrealize(const Realization2& m, Scale scale) {
  const Hypercomplex h{m(0, 0), std::conj(m(1, 0)), scale};
  const Realization2 image = realize(h);
  const double tol = kRealizationShapeTol * (1.0 + max_abs(m));
  if (std::abs(image(0, 1) - m(0, 1)) > tol ||
      std::abs(image(1, 1) - m(1, 1)) > tol) {
    throw NotInRealization(
        "unrealize: matrix is not of the form [[a, t*b], [conj(b), conj(a)]]");
  }
  return h;
}

Realization2 matmul(const Realization2& m1, const Realization2& m2) {
  Realization2 r{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      r(i, j) = m1(i, 0) * m2(0, j) + m1(i, 1) * m2(1, j);
    }
  }
  return r;
}

Realization2 madd(const Realization2& m1, const Realization2& m2) {
  Realization2 r{};
  for (int k = 0; k < 4; ++k) r.e[k] = m1.e[k] + m2.e[k];
  return r;
}

Realization2 msub(const Realization2& m1, const Realization2& m2) {
  Realization2 r{};
  for (int k = 0; k < 4; ++k) r.e[k] = m1.e[k] - m2.e[k];
  return r;
}

cplx det2(const Realization2& m) {
  return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

Realization2 inverse2(const Realization2& m) {
  const cplx d = det2(m);
  if (std::abs(d) <= kSingularEps * (1.0 + max_abs(m) * max_abs(m))) {
    throw SingularElement("inverse2: matrix determinant is negligible");
  }
  return {{m(1, 1) / d, -m(0, 1) / d, -m(1, 0) / d, m(0, 0) / d}};
}

double max_abs(const Realization2& m) {
  double r = 0.0;
  for (const cplx& z : m.e) r = std::max(r, std::abs(z));
  return r;
}

std::array<cplx, 2> eigenvalues(const Realization2& m) {
  // Roots of z^2 - tr(m) z + det(m) = 0.
  const cplx half_trace = 0.5 * (m(0, 0) + m(1, 1));
  const cplx root = std::sqrt(half_trace * half_trace - det2(m));
  return {half_trace + root, half_trace - root};
}

}  // namespace hct
