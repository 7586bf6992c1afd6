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

#include "hct/freeprob.hpp"

#include <cmath>
#include <complex>

#include "hct/errors.hpp"
#include "hct/spectral.hpp"

namespace hct {

namespace {

void check_length(std::size_t n) {
  if (n == 0) throw RangeError("moment word must have at least one letter");
  if (n > kMaxMomentLength)
    throw RangeError("moment word exceeds maximum length " +
                     std::to_string(kMaxMomentLength));
}

bool b_is_zero(const Hypercomplex& h) {
  return std::abs(h.b) <= kZeroComponentEps * (1.0 + std::abs(h.a));
}

}  // namespace

MomentWord MomentWord::parse(std::string_view text) {
  MomentWord word;
  word.letters.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case 'P':
        word.letters.push_back(Letter::Plain);
        break;
      case 'S':
        word.letters.push_back(Letter::Star);
        break;
      default:
        throw ParseError(std::string("invalid moment letter '") + c +
                         "' (expected 'P' or 'S')");
    }
  }
  check_length(word.letters.size());
  return word;
}

std::string MomentWord::str() const {
  std::string s;
  s.reserve(letters.size());
  for (Letter l : letters) s.push_back(l == Letter::Plain ? 'P' : 'S');
  return s;
}

double tau_op(const MulOperator& m) { return trace_tau(m.symbol); }

double free_moment_direct(const Hypercomplex& h, const MomentWord& word) {
  check_length(word.letters.size());
  const Hypercomplex star = conjugate(h);
  Hypercomplex acc =
      word.letters.front() == Letter::Plain ? h : star;
  for (std::size_t i = 1; i < word.letters.size(); ++i) {
    acc = mul(acc, word.letters[i] == Letter::Plain ? h : star);
  }
  return trace_tau(acc);
}

std::optional<double> free_moment_closed(const Hypercomplex& h,
                                         const MomentWord& word) {
  check_length(word.letters.size());

  // The closed form evaluates moments of diag(sigma, conj(sigma)), so it
  // applies only to elements similar to (sigma_t(h), 0).  A real-branch
  // spectral value means h is similar to a *non-scalar* diagonal matrix,
  // which is never similar to the scalar diag(sigma, sigma): decline.
  const SpectralValue sv = spectralize(h);
  if (sv.branch != Branch::ComplexBranch) return std::nullopt;

  if (!b_is_zero(h)) {
    if (h.scale.regime() == Regime::Zero) return std::nullopt;
    if (h.scale.regime() == Regime::Positive) {
      // At positive scale the similarity can genuinely fail even on the
      // complex branch; accept only a self-verified witness.
      if (!similarity_witness(h).has_value()) return std::nullopt;
    }
    // Negative scale: the witness construction always succeeds (H_t is a
    // noncommutative field), so no further gate is needed.
  }

  const double r = std::abs(sv.value);
  const double theta = std::arg(sv.value);
  double signed_angle = 0.0;
  for (Letter l : word.letters) {
    signed_angle += (l == Letter::Plain) ? theta : -theta;
  }
  const double n = static_cast<double>(word.letters.size());
  return std::pow(r, n) * std::cos(signed_angle);
}

std::vector<MomentWord> all_words(std::size_t n) {
  check_length(n);
  std::vector<MomentWord> words;
  const std::size_t total = std::size_t{1} << n;
  words.reserve(total);
  for (std::size_t mask = 0; mask < total; ++mask) {
    MomentWord w;
    w.letters.reserve(n);
    // Most-significant position first keeps the order lexicographic with
    // Plain ('P') sorting before Star ('S').
    for (std::size_t i = 0; i < n; ++i) {
      const bool star = (mask >> (n - 1 - i)) & 1u;
      w.letters.push_back(star ? Letter::Star : Letter::Plain);
    }
    words.push_back(std::move(w));
  }
  return words;
}

}  // namespace hct
