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

// The 2x2 matrix realization pi_t and its helpers.  Eigenvalues are checked
// by substitution into the characteristic polynomial, which is independent
// of the quadratic-formula implementation.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "helpers.hpp"

using namespace hct;
using hct::testing::diff_max;
using hct::testing::kScaleGrid;
using hct::testing::random_element;
using hct::testing::uniform;

namespace {

Realization2 random_matrix(std::mt19937_64& rng, double amp = 2.0) {
  Realization2 m{};
  for (auto& entry : m.e)
    entry = cplx(uniform(rng, -amp, amp), uniform(rng, -amp, amp));
  return m;
}

}  // namespace

TEST_CASE("realization has the pinned entry layout") {
  const Scale scale(3.0);
  const Hypercomplex h{cplx(1, 2), cplx(4, -5), scale};
  const Realization2 m = realize(h);
  CHECK(m(0, 0) == cplx(1, 2));
  CHECK(m(0, 1) == 3.0 * cplx(4, -5));
  CHECK(m(1, 0) == std::conj(cplx(4, -5)));
  CHECK(m(1, 1) == std::conj(cplx(1, 2)));

  CHECK(diff_max(identity2(),
                 realize({cplx(1, 0), cplx(0, 0), scale})) == 0.0);
}

TEST_CASE("realization is a homomorphism for + and .t") {
  std::mt19937_64 rng(201);
  for (double t : kScaleGrid) {
    const Scale scale(t);
    for (int n = 0; n < 200; ++n) {
      const Hypercomplex h1 = random_element(rng, scale);
      const Hypercomplex h2 = random_element(rng, scale);
      // The t*b entry rounds differently on the two sides (t*(b1 + b2)
      // versus t*b1 + t*b2), so allow a few ulps there.
      CHECK(diff_max(realize(add(h1, h2)),
                     madd(realize(h1), realize(h2))) <=
            1e-14 * (1.0 + max_abs(realize(h1)) + max_abs(realize(h2))));
      const Realization2 lhs = realize(mul(h1, h2));
      const Realization2 rhs = matmul(realize(h1), realize(h2));
      CHECK(diff_max(lhs, rhs) <= 1e-12 * (1.0 + max_abs(rhs)));
    }
  }
}

TEST_CASE("unrealize inverts realize and rejects off-image matrices") {
  std::mt19937_64 rng(202);
  for (double t : kScaleGrid) {
    const Scale scale(t);
    for (int n = 0; n < 200; ++n) {
      const Hypercomplex h = random_element(rng, scale);
      CHECK(diff_max(unrealize(realize(h), scale), h) == 0.0);
    }
  }

  // A generic matrix is not of the form [[a, t b], [conj(b), conj(a)]].
  const Realization2 off{{cplx(1, 0), cplx(2, 0), cplx(3, 0), cplx(4, 0)}};
  CHECK_THROWS_AS(unrealize(off, Scale(-1.0)), NotInRealization);

  // At t = 0 the top-right entry must vanish.
  const Realization2 top_right{
      {cplx(1, 0), cplx(0.5, 0), cplx(0, 0), cplx(1, 0)}};
  CHECK_THROWS_AS(unrealize(top_right, Scale(0.0)), NotInRealization);

  // The same matrix is in the image at a scale that matches its entries.
  const Scale st(2.0);
  const Hypercomplex h{cplx(1, 1), cplx(0.5, -0.25), st};
  CHECK_NOTHROW(unrealize(realize(h), st));
}

TEST_CASE("determinant and inverse commute with realization") {
  std::mt19937_64 rng(203);
  for (double t : kScaleGrid) {
    const Scale scale(t);
    int tested = 0;
    while (tested < 150) {
      const Hypercomplex h = random_element(rng, scale);
      const cplx d2 = det2(realize(h));
      CHECK(std::abs(d2.imag()) <= 1e-12 * (1.0 + std::abs(d2)));
      CHECK(std::abs(det(h) - d2.real()) <= 1e-12 * (1.0 + std::abs(d2)));
      if (is_singular(h)) continue;
      ++tested;
      CHECK(diff_max(realize(inverse(h)), inverse2(realize(h))) <=
            1e-10 * (1.0 + max_abs(realize(inverse(h)))));
    }
  }

  const Realization2 singular{{cplx(1, 0), cplx(1, 0), cplx(1, 0), cplx(1, 0)}};
  CHECK_THROWS_AS(inverse2(singular), SingularElement);
}

TEST_CASE("matrix helpers behave like matrix algebra") {
  std::mt19937_64 rng(204);
  for (int n = 0; n < 100; ++n) {
    const Realization2 m1 = random_matrix(rng);
    const Realization2 m2 = random_matrix(rng);
    const Realization2 m3 = random_matrix(rng);
    CHECK(diff_max(matmul(matmul(m1, m2), m3), matmul(m1, matmul(m2, m3))) <=
          1e-12 * (1.0 + max_abs(matmul(m1, matmul(m2, m3)))));
    CHECK(diff_max(madd(msub(m1, m2), m2), m1) <= 1e-14 * (1.0 + max_abs(m1)));
    CHECK(diff_max(matmul(identity2(), m1), m1) == 0.0);
    // det is multiplicative.
    const cplx lhs = det2(matmul(m1, m2));
    const cplx rhs = det2(m1) * det2(m2);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(rhs)));
  }
}

TEST_CASE("eigenvalues satisfy the characteristic polynomial") {
  std::mt19937_64 rng(205);
  for (int n = 0; n < 300; ++n) {
    const Realization2 m = random_matrix(rng);
    const cplx tr = m(0, 0) + m(1, 1);
    const cplx d = det2(m);
    for (const cplx z : eigenvalues(m)) {
      // z^2 - tr z + det = 0 is the defining property, checked directly.
      CHECK(std::abs(z * z - tr * z + d) <= 1e-10 * (1.0 + std::abs(z * z)));
    }
  }

  // Hand value: diag(2, 5) has eigenvalues {2, 5}.
  const Realization2 diag{{cplx(2, 0), cplx(0, 0), cplx(0, 0), cplx(5, 0)}};
  CHECK(hct::testing::pair_distance(eigenvalues(diag),
                                    {cplx(2, 0), cplx(5, 0)}) <= 1e-14);
}

TEST_CASE("eigenvalues of realized elements come in the expected shapes") {
  // t < 0 with nonzero b: complex conjugate pair off the real axis.
  const Scale qt(-1.0);
  const Hypercomplex h{cplx(0, 0), cplx(1, 0), qt};  // the quaternion j
  const auto eig = eigenvalues(realize(h));
  CHECK(hct::testing::pair_distance(eig, {cplx(0, 1), cplx(0, -1)}) <= 1e-12);

  // t > 0 across the cone: (0, 1) at t = 4 has eigenvalues +/- 2.
  const Scale st(4.0);
  const auto eig2 = eigenvalues(realize({cplx(0, 0), cplx(1, 0), st}));
  CHECK(hct::testing::pair_distance(eig2, {cplx(2, 0), cplx(-2, 0)}) <= 1e-12);
}
