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
#include <optional>

#include "hct/realization.hpp"

namespace hct {

/// Which branch the t-spectralization took.  Writing a = x + y*i and
/// b = u + v*i, the discriminant is R = y^2 - t*(u^2 + v^2):
///   - ComplexBranch:   R >= 0, value = x + i*sqrt(R)        (Im >= 0), or
///                      b = 0, value = a verbatim (the one convention under
///                      which Im may be negative);
///   - RealMinusBranch: R < 0, value = x - sqrt(-R), a real number whose
///                      symbolic conjugate is x + sqrt(-R) (not the complex
///                      conjugate).
enum class Branch { ComplexBranch, RealMinusBranch };

/// The t-spectralization sigma_t(h): one designated spectral point of the
/// realization, with the branch tag recording the sign of R.
struct SpectralValue {
  cplx value;
  Branch branch;
};

/// The diagonal pair {sigma_t(h), sigma-bar_t(h)}: the complex conjugate of
/// sigma on the ComplexBranch, and {x - sqrt(-R), x + sqrt(-R)} on the
/// RealMinusBranch.  As a matrix it is diag(diag[0], diag[1]).
struct SpectralForm {
  std::array<cplx, 2> diag;
  Branch branch;
};

/// sigma_t(h): a itself when b = 0 (within kZeroComponentEps * (1 + |a|)),
/// else x + i*sqrt(R) when R >= 0, else x - sqrt(-R).
SpectralValue spectralize(const Hypercomplex& h);

/// The spectral form of h (see SpectralForm).
SpectralForm spectral_form(const Hypercomplex& h);

/// The spectral form as a diagonal 2x2 matrix.
Realization2 spectral_form_matrix(const SpectralForm& f);

/// The unordered spectrum {x + i*sqrt(R), x - i*sqrt(R)} with the principal
/// complex square root; equals the eigenvalue pair of realize(h) as a set.
std::array<cplx, 2> spectrum(const Hypercomplex& h);

/// The t-spectral relation: |sigma_t(h1) - sigma_t(h2)| <= tol.  For t < 0
/// this coincides with similarity of the realizations.  Throws
/// ScaleMismatch.
bool spectral_related(const Hypercomplex& h1, const Hypercomplex& h2,
                      double tol = kPredicateTol);

/// A similarity witness q such that realize(q)^-1 realize(h) realize(q)
/// equals the spectral-form matrix of h.
///
/// The witness is q = (1, conj((w - a)/(t*b))) with w = x + i*sqrt(R)
/// (complex square root, so w is the designated spectral point on either
/// branch); for b = 0 the realization is already diagonal and q = (1, 0).
/// The output is verified numerically: if q is singular or the conjugation
/// residual exceeds kWitnessVerifyTol (scaled), the function returns
/// nullopt instead of an unverified witness.  For t < 0 a valid witness
/// always exists; for t >= 0 it may not.
///
/// Throws ZeroDivisor when t = 0 and b != 0 (the formula divides by t*b).
std::optional<Hypercomplex> similarity_witness(const Hypercomplex& h);

}  // namespace hct
