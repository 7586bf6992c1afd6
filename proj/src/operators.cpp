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

#include "hct/operators.hpp"

#include <algorithm>
#include <cmath>

namespace hct {

Mat4 m4_identity() {
  Mat4 m{};
  for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
  return m;
}

Mat4 m4_mul(const Mat4& a, const Mat4& b) {
  Mat4 r{};
  for (int i = 0; i < 4; ++i) {
    for (int k = 0; k < 4; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < 4; ++j) r(i, j) += aik * b(k, j);
    }
  }
  return r;
}

Mat4 m4_add(const Mat4& a, const Mat4& b) {
  Mat4 r{};
  for (int k = 0; k < 16; ++k) r.e[k] = a.e[k] + b.e[k];
  return r;
}

Mat4 m4_sub(const Mat4& a, const Mat4& b) {
  Mat4 r{};
  for (int k = 0; k < 16; ++k) r.e[k] = a.e[k] - b.e[k];
  return r;
}

Mat4 m4_scale(double r, const Mat4& a) {
  Mat4 m{};
  for (int k = 0; k < 16; ++k) m.e[k] = r * a.e[k];
  return m;
}

double m4_max_abs(const Mat4& a) {
  double r = 0.0;
  for (double v : a.e) r = std::max(r, std::abs(v));
  return r;
}

std::array<double, 4> coords(const Hypercomplex& h) {
  return {h.a.real(), h.a.imag(), h.b.real(), h.b.imag()};
}

Hypercomplex from_coords(const std::array<double, 4>& c, Scale scale) {
  return {cplx(c[0], c[1]), cplx(c[2], c[3]), scale};
}

MulOperator make_operator(const Hypercomplex& eta) {
  // Column k of the matrix is the action on the k-th basis vector of
  // {(1,0), (i,0), (0,1), (0,i)}.
  const std::array<Hypercomplex, 4> basis = {
      Hypercomplex{cplx(1, 0), cplx(0, 0), eta.scale},
      Hypercomplex{cplx(0, 1), cplx(0, 0), eta.scale},
      Hypercomplex{cplx(0, 0), cplx(1, 0), eta.scale},
      Hypercomplex{cplx(0, 0), cplx(0, 1), eta.scale},
  };
  MulOperator m{eta, {}};
  for (int k = 0; k < 4; ++k) {
    const std::array<double, 4> column = coords(mul(eta, basis[k]));
    for (int r = 0; r < 4; ++r) m.matrix4(r, k) = column[r];
  }
  return m;
}

Hypercomplex apply(const MulOperator& m, const Hypercomplex& h) {
  detail::require_same_scale(m.symbol, h, "apply");
  const std::array<double, 4> c = coords(h);
  std::array<double, 4> out{};
  for (int r = 0; r < 4; ++r) {
    for (int k = 0; k < 4; ++k) out[r] += m.matrix4(r, k) * c[k];
  }
  return from_coords(out, h.scale);
}

MulOperator op_adjoint(const MulOperator& m) {
  return make_operator(conjugate(m.symbol));
}

double op_norm(const MulOperator& m) { return seminorm(m.symbol); }

bool is_self_adjoint(const MulOperator& m, double tol) {
  return std::abs(m.symbol.a.imag()) <= tol && std::abs(m.symbol.b) <= tol;
}

bool is_projection(const MulOperator& m, double tol) {
  if (std::abs(m.symbol.b) > tol) return false;
  return std::abs(m.symbol.a) <= tol || std::abs(m.symbol.a - cplx(1)) <= tol;
}

bool is_normal(const MulOperator& m, double tol) {
  const Mat4 star = op_adjoint(m).matrix4;
  const Mat4 commutator =
      m4_sub(m4_mul(star, m.matrix4), m4_mul(m.matrix4, star));
  return m4_max_abs(commutator) <= tol;
}

bool is_unitary(const MulOperator& m, double tol) {
  return std::abs(det(m.symbol) - 1.0) <= tol;
}

}  // namespace hct
