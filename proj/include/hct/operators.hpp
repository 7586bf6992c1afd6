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

#include "hct/core.hpp"

namespace hct {

/// A 4x4 real matrix: the R-linear action of a multiplication operator on
/// the coordinates (x, y, u, v) of h = (x + y*i, u + v*i).
struct Mat4 {
  // Row-major.
  std::array<double, 16> e{};

  double operator()(int r, int c) const { return e[4 * r + c]; }
  double& operator()(int r, int c) { return e[4 * r + c]; }
};

Mat4 m4_identity();
Mat4 m4_mul(const Mat4& a, const Mat4& b);
Mat4 m4_add(const Mat4& a, const Mat4& b);
Mat4 m4_sub(const Mat4& a, const Mat4& b);
Mat4 m4_scale(double r, const Mat4& a);

/// Largest entry magnitude (max-abs norm, used for predicate residuals).
double m4_max_abs(const Mat4& a);

/// Real coordinates (x, y, u, v) of h, in the basis
/// {(1,0), (i,0), (0,1), (0,i)} of H_t as an R-vector space.
std::array<double, 4> coords(const Hypercomplex& h);

/// Inverse of coords at a given scale.
Hypercomplex from_coords(const std::array<double, 4>& c, Scale scale);

/// The multiplication operator M_eta: h -> eta .t h, stored concretely as
/// the 4x4 real matrix of its action so that operator identities become
/// finite linear-algebra checks.
struct MulOperator {
  Hypercomplex symbol;
  Mat4 matrix4;
};

/// Build M_eta; the matrix columns are coords(eta .t basis_k).
MulOperator make_operator(const Hypercomplex& eta);

/// Apply the operator to an element of the same scale (matrix4 x coords).
/// Throws ScaleMismatch.
Hypercomplex apply(const MulOperator& m, const Hypercomplex& h);

/// The adjoint M_eta^* = M_{conj(eta)} with respect to the form <,>_t.
MulOperator op_adjoint(const MulOperator& m);

/// Operator norm ||M_eta|| = ||eta||_t (the semi-norm of the symbol).
/// On null-cone symbols this is 0: the operator annihilates the semi-norm
/// of every argument, and the sup-over-unit-sphere definition is ill-posed
/// on the degenerate sphere, so the symbol semi-norm is the operative
/// definition.
double op_norm(const MulOperator& m);

/// Self-adjoint iff the symbol is (real, 0) within tol.
bool is_self_adjoint(const MulOperator& m, double tol = kPredicateTol);

/// Projection iff the symbol is (0,0) or (1,0) within tol — these are the
/// only idempotent self-adjoint multiplication operators at any scale.
bool is_projection(const MulOperator& m, double tol = kPredicateTol);

/// Every multiplication operator is normal; the predicate nevertheless
/// computes the commutator ||M^* M - M M^*|| <= tol so the identity is
/// exercised rather than assumed.
bool is_normal(const MulOperator& m, double tol = kPredicateTol);

/// Unitary iff |det(symbol) - 1| <= tol; isometry and unitarity coincide
/// for multiplication operators.
bool is_unitary(const MulOperator& m, double tol = kPredicateTol);

}  // namespace hct
