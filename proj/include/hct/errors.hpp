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

#include <stdexcept>

namespace hct {

/// Binary operation applied to elements living over different scales t.
/// Scales never coerce: mixing them is a usage error.
class ScaleMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Inversion (or another operation requiring invertibility) applied to an
/// element whose determinant |a|^2 - t|b|^2 vanishes within tolerance.
class SingularElement : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A 2x2 complex matrix handed to unrealize() does not have the
/// [[a, t*b], [conj(b), conj(a)]] shape within tolerance.
class NotInRealization : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The similarity-witness formula divides by t*b; at t = 0 with b != 0 that
/// divisor is identically zero.
class ZeroDivisor : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Polar decomposition requested on (or too close to) the null cone
/// x^2 = t*y^2, where the semi-norm vanishes and no decomposition exists.
class NullCone : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Unit-set sampling over a range that is empty (lo > hi, or clipped away
/// entirely by the regime's domain restriction).
class EmptyRange : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A count or length argument outside its documented bounds
/// (e.g. moment words are capped at 24 letters).
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Malformed textual input (CLI literals such as "a_re,a_im,b_re,b_im").
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace hct
