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

#include "hct/hyperbolic.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "hct/errors.hpp"

namespace hct {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

}  // namespace

Hypercomplex embed(const Hyperbolic& w) {
  return {cplx(w.x, 0.0), cplx(w.y, 0.0), w.scale};
}

Hyperbolic project(const Hypercomplex& h) {
  const double mag = std::max(std::abs(h.a), std::abs(h.b));
  const double tol = kZeroComponentEps * (1.0 + mag);
  if (std::abs(h.a.imag()) > tol || std::abs(h.b.imag()) > tol) {
    throw NotInRealization(
        "element has non-real components and is not in the hyperbolic "
        "subring");
  }
  return {h.a.real(), h.b.real(), h.scale};
}

Hyperbolic hadd(const Hyperbolic& w1, const Hyperbolic& w2) {
  if (w1.scale != w2.scale)
    throw ScaleMismatch("hadd: operands have different scales");
  return {w1.x + w2.x, w1.y + w2.y, w1.scale};
}

Hyperbolic hsub(const Hyperbolic& w1, const Hyperbolic& w2) {
  if (w1.scale != w2.scale)
    throw ScaleMismatch("hsub: operands have different scales");
  return {w1.x - w2.x, w1.y - w2.y, w1.scale};
}

Hyperbolic hneg(const Hyperbolic& w) { return {-w.x, -w.y, w.scale}; }

Hyperbolic hscale(double r, const Hyperbolic& w) {
  return {r * w.x, r * w.y, w.scale};
}

Hyperbolic hmul(const Hyperbolic& w1, const Hyperbolic& w2) {
  if (w1.scale != w2.scale)
    throw ScaleMismatch("hmul: operands have different scales");
  const double t = w1.scale.t();
  return {w1.x * w2.x + t * w1.y * w2.y, w1.x * w2.y + w1.y * w2.x, w1.scale};
}

double hdet(const Hyperbolic& w) {
  return w.x * w.x - w.scale.t() * w.y * w.y;
}

double hseminorm(const Hyperbolic& w) { return std::sqrt(std::abs(hdet(w))); }

Hyperbolic jt(Scale scale) { return {0.0, 1.0, scale}; }

Hyperbolic jt_power(int n, Scale scale) {
  if (n < 1) throw std::invalid_argument("jt_power: exponent must be >= 1");
  const double t = scale.t();
  if (n % 2 == 0) return {std::pow(t, n / 2), 0.0, scale};
  return {0.0, std::pow(t, (n - 1) / 2), scale};
}

Hyperbolic exp_jt_series(double theta, Scale scale, int terms) {
  if (terms < 1)
    throw std::invalid_argument("exp_jt_series: need at least one term");
  // term_n = t^{floor(n/2)} theta^n / n! with the convention that even n
  // contributes to the first component and odd n to the second; the ratio
  // term_n/term_{n-1} is theta/n for odd n and t*theta/n for even n.
  double x = 0.0;
  double y = 0.0;
  double term = 1.0;
  for (int n = 0; n < terms; ++n) {
    if (n > 0) term *= (n % 2 == 1) ? theta / n : scale.t() * theta / n;
    if (n % 2 == 0)
      x += term;
    else
      y += term;
  }
  return {x, y, scale};
}

Hyperbolic exp_jt(double theta, Scale scale) {
  const double t = scale.t();
  switch (scale.regime()) {
    case Regime::Positive: {
      const double s = std::sqrt(t);
      return {std::cosh(s * theta), std::sinh(s * theta) / s, scale};
    }
    case Regime::Negative: {
      const double s = std::sqrt(-t);
      return {std::cos(s * theta), std::sin(s * theta) / s, scale};
    }
    case Regime::Zero:
      return {1.0, theta, scale};
  }
  return {1.0, 0.0, scale};  // unreachable
}

bool unit_set_membership(const Hyperbolic& w, double tol) {
  return std::abs(std::abs(hdet(w)) - 1.0) <= tol;
}

const char* to_string(UnitBranch b) {
  switch (b) {
    case UnitBranch::Upper:
      return "upper";
    case UnitBranch::Lower:
      return "lower";
    case UnitBranch::LinePos:
      return "line_pos";
    case UnitBranch::LineNeg:
      return "line_neg";
    case UnitBranch::PlusUpper:
      return "plus_upper";
    case UnitBranch::PlusLower:
      return "plus_lower";
    case UnitBranch::MinusUpper:
      return "minus_upper";
    case UnitBranch::MinusLower:
      return "minus_lower";
  }
  return "unknown";
}

namespace {

// Evenly spaced parameters over [lo, hi]: endpoints included, midpoint for a
// single sample.
std::vector<double> even_params(double lo, double hi, int m) {
  std::vector<double> ps;
  ps.reserve(static_cast<std::size_t>(m));
  if (m == 1) {
    ps.push_back(0.5 * (lo + hi));
    return ps;
  }
  const double step = (hi - lo) / (m - 1);
  for (int i = 0; i < m; ++i) ps.push_back(lo + i * step);
  return ps;
}

// Evenly spaced parameters over a union of one or two disjoint intervals,
// by arc length of the concatenated parameter domain.
std::vector<double> even_params_union(
    const std::vector<std::pair<double, double>>& parts, int m) {
  if (parts.size() == 1) return even_params(parts[0].first, parts[0].second, m);
  const double len1 = parts[0].second - parts[0].first;
  const double len2 = parts[1].second - parts[1].first;
  const double total = len1 + len2;
  std::vector<double> ps;
  ps.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const double s =
        (m == 1) ? 0.5 * total : total * static_cast<double>(i) / (m - 1);
    if (s <= len1)
      ps.push_back(parts[0].first + s);
    else
      ps.push_back(parts[1].first + (s - len1));
  }
  return ps;
}

// How many of `count` samples branch k out of `branches` receives.
int branch_quota(int count, int branches, int k) {
  return count / branches + (k < count % branches ? 1 : 0);
}

}  // namespace

std::vector<UnitSample> sample_unit_set(Scale scale, int count,
                                        Interval range) {
  if (count < 1)
    throw std::invalid_argument("sample_unit_set: count must be >= 1");
  if (!(range.lo <= range.hi))
    throw EmptyRange("sample_unit_set: empty parameter range");

  const double t = scale.t();
  std::vector<UnitSample> samples;
  samples.reserve(static_cast<std::size_t>(count));

  switch (scale.regime()) {
    case Regime::Negative: {
      // Circle-like curve: y = +/- sqrt((1 - x^2)/|t|), x in [-1, 1].
      const double lo = std::max(range.lo, -1.0);
      const double hi = std::min(range.hi, 1.0);
      if (!(lo <= hi))
        throw EmptyRange("sample_unit_set: range does not meet [-1, 1]");
      const UnitBranch branches[2] = {UnitBranch::Upper, UnitBranch::Lower};
      for (int k = 0; k < 2; ++k) {
        const int m = branch_quota(count, 2, k);
        for (double x : even_params(lo, hi, m)) {
          const double y = std::sqrt(std::max(0.0, (1.0 - x * x) / -t));
          samples.push_back(
              {{x, k == 0 ? y : -y, scale}, branches[k]});
        }
      }
      break;
    }
    case Regime::Zero: {
      // Two vertical lines x = +1 / x = -1, parameterized by y.
      const UnitBranch branches[2] = {UnitBranch::LinePos, UnitBranch::LineNeg};
      for (int k = 0; k < 2; ++k) {
        const int m = branch_quota(count, 2, k);
        for (double y : even_params(range.lo, range.hi, m)) {
          samples.push_back({{k == 0 ? 1.0 : -1.0, y, scale}, branches[k]});
        }
      }
      break;
    }
    case Regime::Positive: {
      // Two hyperbola families: x^2 - t y^2 = +1 needs |x| >= 1; the -1
      // family accepts every x.  Each family splits into a +/- y branch.
      std::vector<std::pair<double, double>> plus_parts;
      if (range.lo <= -1.0)
        plus_parts.emplace_back(range.lo, std::min(range.hi, -1.0));
      if (range.hi >= 1.0)
        plus_parts.emplace_back(std::max(range.lo, 1.0), range.hi);
      if (plus_parts.empty())
        throw EmptyRange(
            "sample_unit_set: range excludes |x| >= 1, required by the "
            "x^2 - t*y^2 = 1 family");
      const UnitBranch branches[4] = {UnitBranch::PlusUpper,
                                      UnitBranch::PlusLower,
                                      UnitBranch::MinusUpper,
                                      UnitBranch::MinusLower};
      for (int k = 0; k < 4; ++k) {
        const int m = branch_quota(count, 4, k);
        const bool plus_family = k < 2;
        const bool upper = (k % 2) == 0;
        const std::vector<double> xs =
            plus_family ? even_params_union(plus_parts, m)
                        : even_params(range.lo, range.hi, m);
        for (double x : xs) {
          const double y2 =
              plus_family ? (x * x - 1.0) / t : (x * x + 1.0) / t;
          const double y = std::sqrt(std::max(0.0, y2));
          samples.push_back({{x, upper ? y : -y, scale}, branches[k]});
        }
      }
      break;
    }
  }
  return samples;
}

const char* to_string(Sector s) {
  switch (s) {
    case Sector::PosReal:
      return "pos_real";
    case Sector::NegReal:
      return "neg_real";
    case Sector::PosImag:
      return "pos_imag";
    case Sector::NegImag:
      return "neg_imag";
  }
  return "unknown";
}

PolarDecomposition polar_decompose(const Hyperbolic& w) {
  const double d = hdet(w);
  if (std::abs(d) <= kSingularEps * (1.0 + w.x * w.x + w.y * w.y)) {
    throw NullCone("polar_decompose: element lies on the null cone");
  }
  const double t = w.scale.t();
  const double radius = hseminorm(w);
  switch (w.scale.regime()) {
    case Regime::Negative: {
      const double s = std::sqrt(-t);
      double raw = std::atan2(s * w.y, w.x);
      if (raw < 0.0) raw += 2.0 * kPi;
      return {radius, raw / s, Sector::PosReal};
    }
    case Regime::Zero:
      return {std::abs(w.x), w.y / w.x,
              w.x > 0.0 ? Sector::PosReal : Sector::NegReal};
    case Regime::Positive: {
      const double s = std::sqrt(t);
      if (std::abs(w.x) > s * std::abs(w.y)) {
        return {radius, std::atanh(s * w.y / w.x) / s,
                w.x > 0.0 ? Sector::PosReal : Sector::NegReal};
      }
      return {radius, std::atanh(w.x / (s * w.y)) / s,
              w.y > 0.0 ? Sector::PosImag : Sector::NegImag};
    }
  }
  throw NullCone("polar_decompose: unreachable");  // silences no-return paths
}

Hyperbolic sector_unit(Sector s, Scale scale) {
  switch (s) {
    case Sector::PosReal:
      return {1.0, 0.0, scale};
    case Sector::NegReal:
      return {-1.0, 0.0, scale};
    case Sector::PosImag:
    case Sector::NegImag: {
      if (scale.regime() != Regime::Positive)
        throw std::invalid_argument(
            "sector_unit: imaginary sectors exist only for t > 0");
      const double inv = 1.0 / std::sqrt(scale.t());
      return {0.0, s == Sector::PosImag ? inv : -inv, scale};
    }
  }
  throw std::invalid_argument("sector_unit: unknown sector");
}

Hyperbolic recompose(const PolarDecomposition& p, Scale scale) {
  return hmul(sector_unit(p.sector, scale),
              hscale(p.radius, exp_jt(p.angle, scale)));
}

}  // namespace hct
