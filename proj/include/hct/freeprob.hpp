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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hct/operators.hpp"

namespace hct {

/// One letter of a free-moment word: the operator itself (Plain) or its
/// adjoint (Star).
enum class Letter { Plain, Star };

/// A word (r_1, ..., r_n) over {Plain, Star}, 1 <= n <= kMaxMomentLength.
/// Rendered textually with 'P' and 'S' ("PS" = plain then star).
struct MomentWord {
  std::vector<Letter> letters;

  /// Parse "P"/"S" text (throws ParseError on any other character,
  /// RangeError on empty/overlong words).
  static MomentWord parse(std::string_view text);

  std::string str() const;
};

/// Words longer than this are rejected: r^n values overflow well before
/// any desk-scale verification needs them.
inline constexpr std::size_t kMaxMomentLength = 24;

/// The trace of a multiplication operator: tau(M_(a,b)) = Re(a).
double tau_op(const MulOperator& m);

/// The joint free moment by direct computation: fold the t-product of h or
/// conj(h) letter by letter and take the trace.  Throws RangeError on
/// empty/overlong words.
double free_moment_direct(const Hypercomplex& h, const MomentWord& word);

/// The closed form under similarity: with sigma_t(h) = r*e^{i*theta}
/// (principal argument) the moment is r^n * cos(sum_l eps_l * theta),
/// eps = +1 for Plain and -1 for Star.
///
/// Applicable exactly when h is verifiably similar to (sigma_t(h), 0),
/// whose realization is diag(sigma, conj(sigma)): always for t < 0 or
/// b = 0; for t > 0 only when the discriminant branch is complex and the
/// similarity witness verifies.  Otherwise returns nullopt
/// (not-applicable is a value here, not an error).
std::optional<double> free_moment_closed(const Hypercomplex& h,
                                         const MomentWord& word);

/// All words of length exactly n, in lexicographic order with P < S
/// ("PP", "PS", "SP", "SS" for n = 2).  Deterministic; used by sweeps.
std::vector<MomentWord> all_words(std::size_t n);

}  // namespace hct
