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

#include <array>
#include <complex>

#include "hct/core.hpp"

namespace hct {

/// A 2x2 complex matrix.  Images of the realization map have the shape
/// [[a, t*b], [conj(b), conj(a)]]; general matrices of this type also serve
/// as the brute-force oracle for every closed form in the library.
struct Realization2 {
  // Row-major entries: e[0] = m00, e[1] = m01, e[2] = m10, e[3] = m11.
  std::array<cplx, 4> e;

  cplx operator()(int r, int c) const { return e[2 * r + c]; }
  cplx& operator()(int r, int c) { return e[2 * r + c]; }
};

/// The 2x2 identity, which is the realization of the unity (1, 0).
Realization2 identity2();

/// The injective ring map pi_t: (a, b) -> [[a, t*b], [conj(b), conj(a)]].
/// It respects + and .t, so matrix arithmetic on images is the ground truth
/// for hypercomplex arithmetic.
Realization2 realize(const Hypercomplex& h);

/// Inverse of realize on its image: pulls (m00, conj(m10)) back to H_t.
/// Throws NotInRealization when m violates the image shape by more than
/// kRealizationShapeTol entrywise (relative to the matrix magnitude).
Hypercomplex unrealize(const Realization2& m, Scale scale);

/// Ordinary 2x2 complex matrix product.
Realization2 matmul(const Realization2& m1, const Realization2& m2);

/// Entrywise sum and difference (used for residuals and linearity checks).
Realization2 madd(const Realization2& m1, const Realization2& m2);
Realization2 msub(const Realization2& m1, const Realization2& m2);

/// Complex determinant m00*m11 - m01*m10.
cplx det2(const Realization2& m);

/// Inverse matrix; throws SingularElement when |det| is negligible
/// relative to the matrix magnitude.
Realization2 inverse2(const Realization2& m);

/// Largest entry modulus (the max-abs matrix norm used for residuals).
double max_abs(const Realization2& m);

/// The two eigenvalues, from the characteristic polynomial
/// z^2 - tr(m) z + det(m) via the quadratic formula with the principal
/// complex square root.  The pair is unordered; callers needing the
/// sigma_t-consistent ordering use the spectral module.
std::array<cplx, 2> eigenvalues(const Realization2& m);

}  // namespace hct
