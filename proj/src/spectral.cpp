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

#include "hct/spectral.hpp"

#include <cmath>

namespace hct {

namespace {

/// b counts as zero when it is negligible against a; only the branch
/// bookkeeping depends on this, not the spectral value itself.
bool b_is_zero(const Hypercomplex& h) {
  return std::abs(h.b) <= kZeroComponentEps * (1.0 + std::abs(h.a));
}

/// The discriminant R = Im(a)^2 - t |b|^2.
double discriminant(const Hypercomplex& h) {
  const double y = h.a.imag();
  return y * y - h.scale.t() * std::norm(h.b);
}

}  // namespace

SpectralValue spectralize(const Hypercomplex& h) {
  if (b_is_zero(h)) {
    // The element is diagonal-like already: sigma_t is a verbatim (the one
    // case where a ComplexBranch value may have negative imaginary part).
    return {h.a, Branch::ComplexBranch};
  }
  const double x = h.a.real();
  const double R = discriminant(h);
  if (R >= 0.0) {
    return {cplx(x, std::sqrt(R)), Branch::ComplexBranch};
  }
  return {cplx(x - std::sqrt(-R), 0.0), Branch::RealMinusBranch};
}

SpectralForm spectral_form(const Hypercomplex& h) {
  const SpectralValue s = spectralize(h);
  if (s.branch == Branch::ComplexBranch) {
    return {{s.value, std::conj(s.value)}, s.branch};
  }
  // Real branch: the partner is the symbolic conjugate x + sqrt(-R).
  const double x = h.a.real();
  const double root = std::sqrt(-discriminant(h));
  return {{cplx(x - root, 0.0), cplx(x + root, 0.0)}, s.branch};
}

Realization2 spectral_form_matrix(const SpectralForm& f) {
  return {{f.diag[0], cplx(0), cplx(0), f.diag[1]}};
}

std::array<cplx, 2> spectrum(const Hypercomplex& h) {
  const double x = h.a.real();
  const cplx root = std::sqrt(cplx(discriminant(h), 0.0));
  const cplx i(0.0, 1.0);
  return {x + i * root, x - i * root};
}

bool spectral_related(const Hypercomplex& h1, const Hypercomplex& h2,
                      double tol) {
  detail::require_same_scale(h1, h2, "spectral_related");
  return std::abs(spectralize(h1).value - spectralize(h2).value) <= tol;
}

std::optional<Hypercomplex> similarity_witness(const Hypercomplex& h) {
  if (b_is_zero(h)) {
    // realize(h) is already diagonal; the identity witnesses it.
    return Hypercomplex{cplx(1), cplx(0), h.scale};
  }
  const double t = h.scale.t();
  if (t == 0.0) {
    throw ZeroDivisor("similarity_witness: t*b vanishes at scale zero");
  }

  // The designated spectral point w = x + i sqrt(R) with the principal
  // complex square root (a real value below the branch cut, matching the
  // real-branch convention of sigma_t).
  const double x = h.a.real();
  const double y = h.a.imag();
  const double R = y * y - t * std::norm(h.b);
  const cplx w = cplx(x, 0.0) + cplx(0.0, 1.0) * std::sqrt(cplx(R, 0.0));

  const Hypercomplex q{cplx(1), std::conj((w - h.a) / (t * h.b)), h.scale};
  if (is_singular(q)) {
    return std::nullopt;
  }

  // Verify numerically: conjugating the realization must reproduce the
  // spectral form.  An unverified witness is worth nothing, so failure
  // degrades to absent (guaranteed not to happen for t < 0).
  const Realization2 mq = realize(q);
  const Realization2 conjugated =
      matmul(inverse2(mq), matmul(realize(h), mq));
  const Realization2 target = spectral_form_matrix(spectral_form(h));
  const double residual = max_abs(msub(conjugated, target));
  if (residual > kWitnessVerifyTol * (1.0 + max_abs(realize(h)))) {
    return std::nullopt;
  }
  return q;
}

}  // namespace hct
