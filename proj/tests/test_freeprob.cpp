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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>
#include <string>

#include "doctest.h"
#include "hct/freeprob.hpp"
#include "hct/realization.hpp"
#include "hct/spectral.hpp"
#include "helpers.hpp"

using namespace hct;
using namespace hct::testing;

namespace {

// Independent oracle: fold the word over the 2x2 realization (matrix of h
// for Plain, of conj(h) for Star) and read the normalized matrix trace.
// tau(g) = Re(g.a) = Re(tr(realize(g))) / 2, and realize is multiplicative,
// so this never touches the t-product or the operator module.
double moment_via_matrices(const Hypercomplex& h, const MomentWord& word) {
  const Realization2 plain = realize(h);
  const Realization2 star = realize(conjugate(h));
  Realization2 acc = identity2();
  for (const Letter l : word.letters) {
    acc = matmul(acc, l == Letter::Plain ? plain : star);
  }
  return 0.5 * (acc.e[0] + acc.e[3]).real();
}

// Max-abs-norm bound on the folded product, for scaling tolerances.
double fold_bound(const Hypercomplex& h, const MomentWord& word) {
  double bound = 1.0;
  const double entry = max_abs(realize(h));
  for (std::size_t l = 0; l < word.letters.size(); ++l) {
    bound *= 2.0 * entry;
  }
  return bound;
}

}  // namespace

TEST_CASE("moment words parse, print, and reject bad input") {
  CHECK(MomentWord::parse("P").letters ==
        std::vector<Letter>{Letter::Plain});
  CHECK(MomentWord::parse("S").letters == std::vector<Letter>{Letter::Star});
  CHECK(MomentWord::parse("PS").str() == "PS");
  CHECK(MomentWord::parse("SPPS").str() == "SPPS");
  const std::string longest(kMaxMomentLength, 'P');
  CHECK(MomentWord::parse(longest).str() == longest);

  CHECK_THROWS_AS(MomentWord::parse(""), RangeError);
  CHECK_THROWS_AS(MomentWord::parse(std::string(kMaxMomentLength + 1, 'S')),
                  RangeError);
  CHECK_THROWS_AS(MomentWord::parse("PXS"), ParseError);
  CHECK_THROWS_AS(MomentWord::parse("ps"), ParseError);
}

TEST_CASE("all_words enumerates lexicographically") {
  const auto two = all_words(2);
  REQUIRE(two.size() == 4);
  CHECK(two[0].str() == "PP");
  CHECK(two[1].str() == "PS");
  CHECK(two[2].str() == "SP");
  CHECK(two[3].str() == "SS");

  const auto three = all_words(3);
  REQUIRE(three.size() == 8);
  CHECK(three[0].str() == "PPP");
  CHECK(three[1].str() == "PPS");
  CHECK(three[4].str() == "SPP");
  CHECK(three[7].str() == "SSS");

  for (std::size_t n = 1; n <= 6; ++n) {
    CHECK(all_words(n).size() == (std::size_t{1} << n));
  }
}

TEST_CASE("tau_op equals the normalized 4x4 matrix trace") {
  std::mt19937_64 rng(501);
  for (double t : kScaleGrid) {
    const Scale scale(t);
    for (int n = 0; n < 100; ++n) {
      const Hypercomplex eta = random_element(rng, scale);
      const MulOperator m = make_operator(eta);
      const double tr4 = m.matrix4(0, 0) + m.matrix4(1, 1) +
                         m.matrix4(2, 2) + m.matrix4(3, 3);
      CHECK(tau_op(m) == tr4 / 4.0);
      CHECK(tau_op(m) == trace_tau(eta));
    }
  }
}

TEST_CASE("direct moments agree with the matrix-trace fold") {
  std::mt19937_64 rng(502);
  for (double t : kScaleGrid) {
    const Scale scale(t);
    for (int n = 0; n < 40; ++n) {
      const Hypercomplex h = random_element(rng, scale);
      for (std::size_t len = 1; len <= 5; ++len) {
        for (const MomentWord& word : all_words(len)) {
          const double expected = moment_via_matrices(h, word);
          CHECK(std::abs(free_moment_direct(h, word) - expected) <=
                1e-12 * (1.0 + fold_bound(h, word)));
        }
      }
    }
  }
}

TEST_CASE("the alternating two-letter moment is the determinant") {
  // h .t conj(h) = (det(h), 0) exactly, so tau of it is det at any scale.
  std::mt19937_64 rng(503);
  const MomentWord ps = MomentWord::parse("PS");
  const MomentWord sp = MomentWord::parse("SP");
  for (double t : kScaleGrid) {
    const Scale scale(t);
    for (int n = 0; n < 50; ++n) {
      const Hypercomplex h = random_element(rng, scale);
      const double d = det(h);
      CHECK(std::abs(free_moment_direct(h, ps) - d) <=
            1e-12 * (1.0 + std::abs(d)));
      CHECK(std::abs(free_moment_direct(h, sp) - d) <=
            1e-12 * (1.0 + std::abs(d)));
    }
  }
}

TEST_CASE("closed form matches the direct fold for negative scales") {
  std::mt19937_64 rng(504);
  for (double t : {-1.0, -2.0}) {
    const Scale scale(t);
    for (int n = 0; n < 30; ++n) {
      const Hypercomplex h = random_element(rng, scale);
      const double r = std::abs(spectralize(h).value);
      for (std::size_t len = 1; len <= 6; ++len) {
        for (const MomentWord& word : all_words(len)) {
          const auto closed = free_moment_closed(h, word);
          REQUIRE(closed.has_value());
          const double direct = free_moment_direct(h, word);
          CHECK(std::abs(*closed - direct) <=
                1e-10 * std::max(1.0, std::pow(r, double(len))));
        }
      }
    }
  }
}

TEST_CASE("closed form also applies whenever b vanishes") {
  std::mt19937_64 rng(505);
  for (double t : {0.0, 0.5, 1.0}) {
    const Scale scale(t);
    for (int n = 0; n < 30; ++n) {
      Hypercomplex h = random_element(rng, scale);
      h.b = cplx(0.0, 0.0);
      for (const MomentWord& word : all_words(3)) {
        const auto closed = free_moment_closed(h, word);
        REQUIRE(closed.has_value());
        CHECK(std::abs(*closed - free_moment_direct(h, word)) <=
              1e-10 * (1.0 + fold_bound(h, word)));
      }
    }
  }
}

TEST_CASE("closed form applies on the strict complex branch at t > 0") {
  std::mt19937_64 rng(506);
  const Scale scale(0.5);
  const MomentWord word = MomentWord::parse("PPS");
  int applied = 0;
  for (int n = 0; n < 300; ++n) {
    const Hypercomplex h = random_element(rng, scale);
    const double R = h.a.imag() * h.a.imag() - 0.5 * std::norm(h.b);
    if (R < 1e-3 || std::abs(h.b) < 1e-3) continue;
    const auto closed = free_moment_closed(h, word);
    ++applied;
    REQUIRE(closed.has_value());
    const double r = std::abs(spectralize(h).value);
    CHECK(std::abs(*closed - free_moment_direct(h, word)) <=
          1e-10 * std::max(1.0, r * r * r));
  }
  CHECK(applied > 50);
}

TEST_CASE("closed form declines exactly where similarity fails") {
  // Real-minus branch at t = 1: spectrum is real but no witness exists.
  const Hypercomplex real_minus{cplx(2.0, 1.0), cplx(2.0, 0.0), Scale(1.0)};
  CHECK(spectralize(real_minus).branch == Branch::RealMinusBranch);
  CHECK(!free_moment_closed(real_minus, MomentWord::parse("PP")).has_value());

  // t = 0 with b != 0: the witness formula is undefined (zero divisor).
  const Hypercomplex flat{cplx(1.0, 2.0), cplx(1.0, 0.0), Scale(0.0)};
  CHECK(!free_moment_closed(flat, MomentWord::parse("PP")).has_value());

  // Defective boundary case at t = 1: R = 0 with b != 0, not similar to
  // any diagonal matrix.
  const Hypercomplex defective{cplx(0.0, 1.0), cplx(1.0, 0.0), Scale(1.0)};
  CHECK(!free_moment_closed(defective, MomentWord::parse("PP")).has_value());

  // The direct fold still works for all three.
  CHECK(std::isfinite(free_moment_direct(real_minus, MomentWord::parse("PP"))));
  CHECK(std::isfinite(free_moment_direct(flat, MomentWord::parse("PP"))));
  CHECK(std::isfinite(free_moment_direct(defective, MomentWord::parse("PP"))));
}

TEST_CASE("all-plain moments are Re(sigma^n), not powers of Re(sigma)") {
  // The quaternion unit j = (0, 1) at t = -1 has sigma = i, so the second
  // all-plain moment is Re(i^2) = -1 while Re(sigma)^2 = 0.  This pins the
  // specialization used for hyperbolic elements to the correct expression.
  const Hypercomplex j{cplx(0.0, 0.0), cplx(1.0, 0.0), Scale(-1.0)};
  const cplx sigma = spectralize(j).value;
  CHECK(sigma == cplx(0.0, 1.0));

  const MomentWord pp = MomentWord::parse("PP");
  const double direct = free_moment_direct(j, pp);
  const auto closed = free_moment_closed(j, pp);
  REQUIRE(closed.has_value());

  const double re_sigma_sq = std::pow(sigma, 2).real();
  const double sq_re_sigma = std::pow(sigma.real(), 2.0);
  CHECK(direct == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(*closed == doctest::Approx(re_sigma_sq).epsilon(1e-12));
  CHECK(std::abs(direct - sq_re_sigma) > 0.5);  // the wrong formula misses

  // Randomized: for t < 0 the all-plain moment of any element equals
  // Re(sigma^n).
  std::mt19937_64 rng(507);
  for (double t : {-1.0, -2.0}) {
    const Scale scale(t);
    for (int n = 0; n < 50; ++n) {
      const Hypercomplex h = random_element(rng, scale);
      const cplx s = spectralize(h).value;
      for (std::size_t len = 1; len <= 6; ++len) {
        const MomentWord word = MomentWord::parse(std::string(len, 'P'));
        const double expected = std::pow(s, double(len)).real();
        CHECK(std::abs(free_moment_direct(h, word) - expected) <=
              1e-10 * std::max(1.0, std::pow(std::abs(s), double(len))));
      }
    }
  }
}

TEST_CASE("length bounds are enforced") {
  const Hypercomplex h{cplx(0.0, 0.5), cplx(0.25, 0.0), Scale(-1.0)};
  MomentWord empty;
  CHECK_THROWS_AS(free_moment_direct(h, empty), RangeError);
  CHECK_THROWS_AS(free_moment_closed(h, empty), RangeError);

  MomentWord overlong;
  overlong.letters.assign(kMaxMomentLength + 1, Letter::Plain);
  CHECK_THROWS_AS(free_moment_direct(h, overlong), RangeError);

  // The maximal admissible length works end to end (small r keeps the
  // values in range).
  const MomentWord longest =
      MomentWord::parse(std::string(kMaxMomentLength, 'P'));
  const auto closed = free_moment_closed(h, longest);
  REQUIRE(closed.has_value());
  CHECK(std::abs(*closed - free_moment_direct(h, longest)) <= 1e-10);
}
