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

// Parsing of the CLI's flat comma-separated real literals: "a_re,a_im,
// b_re,b_im" for hypercomplex values, "x,y" for hyperbolic ones,
// "a11,a12,a21,a22" for matrices, and "lo:hi" for parameter ranges.

#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include "hct/core.hpp"
#include "hct/errors.hpp"
#include "hct/hyperbolic.hpp"

namespace hct::cli {

/// Parse one real literal; throws ParseError naming the offending token on
/// anything but a finite decimal number (surrounding spaces allowed).
inline double parse_real(const std::string& token) {
  const char* begin = token.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin) throw ParseError("not a number: '" + token + "'");
  while (*end == ' ' || *end == '\t') ++end;
  if (*end != '\0')
    throw ParseError("trailing characters in number: '" + token + "'");
  if (!std::isfinite(v))
    throw ParseError("number out of range: '" + token + "'");
  return v;
}

/// Split on `sep` and parse exactly `expected` reals.
inline std::vector<double> parse_reals(const std::string& literal,
                                       std::size_t expected, char sep = ',') {
  std::vector<double> values;
  std::string token;
  for (std::size_t i = 0; i <= literal.size(); ++i) {
    if (i == literal.size() || literal[i] == sep) {
      values.push_back(parse_real(token));
      token.clear();
    } else {
      token.push_back(literal[i]);
    }
  }
  if (values.size() != expected) {
    throw ParseError("expected " + std::to_string(expected) +
                     " comma-separated reals, got " +
                     std::to_string(values.size()) + " in '" + literal + "'");
  }
  return values;
}

/// "a_re,a_im,b_re,b_im" -> Hypercomplex at the given scale.
inline Hypercomplex parse_hypercomplex(const std::string& literal,
                                       Scale scale) {
  const std::vector<double> v = parse_reals(literal, 4);
  return {cplx(v[0], v[1]), cplx(v[2], v[3]), scale};
}

/// "x,y" -> Hyperbolic at the given scale.
inline Hyperbolic parse_hyperbolic(const std::string& literal, Scale scale) {
  const std::vector<double> v = parse_reals(literal, 2);
  return {v[0], v[1], scale};
}

/// "lo:hi" -> Interval (validity is the callee's concern; EmptyRange comes
/// from the sampler).
inline Interval parse_range(const std::string& literal) {
  const std::vector<double> v = parse_reals(literal, 2, ':');
  return {v[0], v[1]};
}

}  // namespace hct::cli
