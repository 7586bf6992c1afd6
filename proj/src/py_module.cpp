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

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <cstdio>
#include <string>

#include "hct/hct.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;

namespace {

std::string fmt_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

std::string fmt_cplx(hct::cplx z) {
  return "(" + fmt_real(z.real()) + (z.imag() < 0 ? "-" : "+") +
         fmt_real(std::abs(z.imag())) + "j)";
}

using Matrix2 = std::array<std::array<hct::cplx, 2>, 2>;
using Matrix4 = std::array<std::array<double, 4>, 4>;

Matrix2 to_nested(const hct::Realization2& m) {
  return {{{m(0, 0), m(0, 1)}, {m(1, 0), m(1, 1)}}};
}

hct::Realization2 from_nested(const Matrix2& m) {
  return {{m[0][0], m[0][1], m[1][0], m[1][1]}};
}

}  // namespace

PYBIND11_MODULE(_hct, m) {
  m.doc() =
      "Scale-parameterized hypercomplex rings H_t and hyperbolic subrings "
      "D_t:\narithmetic, spectral analysis, operator predicates, free "
      "moments,\nscaled exponentials, polar decomposition, unit sets, and "
      "the M2(R) action.";

  // --- exceptions ----------------------------------------------------------
  py::register_exception<hct::ScaleMismatch>(m, "ScaleMismatch",
                                             PyExc_ValueError);
  py::register_exception<hct::SingularElement>(m, "SingularElement",
                                               PyExc_ArithmeticError);
  py::register_exception<hct::NotInRealization>(m, "NotInRealization",
                                                PyExc_ValueError);
  py::register_exception<hct::ZeroDivisor>(m, "ZeroDivisor",
                                           PyExc_ZeroDivisionError);
  py::register_exception<hct::NullCone>(m, "NullCone", PyExc_ArithmeticError);
  py::register_exception<hct::EmptyRange>(m, "EmptyRange", PyExc_ValueError);
  py::register_exception<hct::RangeError>(m, "RangeError", PyExc_ValueError);
  py::register_exception<hct::ParseError>(m, "ParseError", PyExc_ValueError);

  // --- scale ----------------------------------------------------------------
  py::enum_<hct::Regime>(m, "Regime")
      .value("NEGATIVE", hct::Regime::Negative)
      .value("ZERO", hct::Regime::Zero)
      .value("POSITIVE", hct::Regime::Positive);

  py::class_<hct::Scale>(m, "Scale")
      .def(py::init<double>(), py::arg("t"))
      .def_property_readonly("t", &hct::Scale::t)
      .def_property_readonly("regime", &hct::Scale::regime)
      .def("__eq__",
           [](hct::Scale s, hct::Scale o) { return s == o; })
      .def("__repr__", [](hct::Scale s) {
        return "Scale(" + fmt_real(s.t()) + ")";
      });

  // --- core -------------------------------------------------------------
  py::enum_<hct::Part>(m, "Part")
      .value("INVERTIBLE", hct::Part::Invertible)
      .value("SINGULAR", hct::Part::Singular);

  py::enum_<hct::SpectralSide>(m, "SpectralSide")
      .value("PLUS", hct::SpectralSide::Plus)
      .value("MINUS_ZERO", hct::SpectralSide::MinusZero);

  py::class_<hct::Classification>(m, "Classification")
      .def_readonly("part", &hct::Classification::part)
      .def_readonly("spectral_side", &hct::Classification::spectral_side);

  py::class_<hct::Hypercomplex>(m, "Hypercomplex")
      .def(py::init([](hct::cplx a, hct::cplx b, hct::Scale scale) {
             return hct::Hypercomplex{a, b, scale};
           }),
           py::arg("a"), py::arg("b"), py::arg("scale"))
      .def_readwrite("a", &hct::Hypercomplex::a)
      .def_readwrite("b", &hct::Hypercomplex::b)
      .def_readonly("scale", &hct::Hypercomplex::scale)
      .def("__add__", &hct::add)
      .def("__sub__", &hct::sub)
      .def("__neg__", &hct::neg)
      .def("__mul__", &hct::mul)
      .def("__rmul__",
           [](const hct::Hypercomplex& h, double r) {
             return hct::scale_by(r, h);
           })
      .def("__repr__", [](const hct::Hypercomplex& h) {
        return "Hypercomplex(" + fmt_cplx(h.a) + ", " + fmt_cplx(h.b) +
               ", t=" + fmt_real(h.scale.t()) + ")";
      });

  m.def("add", &hct::add, "Componentwise sum.");
  m.def("sub", &hct::sub, "Componentwise difference.");
  m.def("neg", &hct::neg, "Additive inverse.");
  m.def("scale_by", &hct::scale_by, py::arg("r"), py::arg("h"),
        "Real scalar multiple.");
  m.def("mul", &hct::mul, "The t-scaled product.");
  m.def("conjugate", &hct::conjugate,
        "Hypercomplex conjugation (a, b) -> (conj(a), -b).");
  m.def("det", py::overload_cast<const hct::Hypercomplex&>(&hct::det),
        "det(h) = |a|^2 - t |b|^2.");
  m.def("is_singular", &hct::is_singular,
        "Whether det(h) vanishes within the singularity tolerance.");
  m.def("inverse", &hct::inverse,
        "Multiplicative inverse; raises SingularElement on the null cone.");
  m.def("classify", &hct::classify,
        "Invertibility and spectral-side classification.");
  m.def("trace_tau", &hct::trace_tau, "The trace functional Re(a).");
  m.def("form", &hct::form,
        "The symmetric bilinear form <h1, h2> = Re(a1 conj(a2) - t b1 "
        "conj(b2)).");
  m.def("seminorm", &hct::seminorm, "sqrt(|det(h)|).");

  // --- realization -----------------------------------------------------
  m.def(
      "realize",
      [](const hct::Hypercomplex& h) { return to_nested(hct::realize(h)); },
      "The 2x2 complex matrix [[a, t b], [conj(b), conj(a)]] of h, as "
      "nested rows.");
  m.def(
      "unrealize",
      [](const Matrix2& matrix, hct::Scale scale) {
        return hct::unrealize(from_nested(matrix), scale);
      },
      py::arg("matrix"), py::arg("scale"),
      "Pull a realized matrix back to H_t; raises NotInRealization if the "
      "matrix is not in the image of realize at this scale.");
  m.def(
      "realized_eigenvalues",
      [](const hct::Hypercomplex& h) {
        return hct::eigenvalues(hct::realize(h));
      },
      "Eigenvalue pair of the matrix realization.");

  // --- spectral ----------------------------------------------------------
  py::enum_<hct::Branch>(m, "Branch")
      .value("COMPLEX", hct::Branch::ComplexBranch)
      .value("REAL_MINUS", hct::Branch::RealMinusBranch);

  py::class_<hct::SpectralValue>(m, "SpectralValue")
      .def_readonly("value", &hct::SpectralValue::value)
      .def_readonly("branch", &hct::SpectralValue::branch)
      .def("__repr__", [](const hct::SpectralValue& sv) {
        return "SpectralValue(" + fmt_cplx(sv.value) + ", " +
               (sv.branch == hct::Branch::ComplexBranch ? "COMPLEX"
                                                        : "REAL_MINUS") +
               ")";
      });

  py::class_<hct::SpectralForm>(m, "SpectralForm")
      .def_readonly("diag", &hct::SpectralForm::diag)
      .def_readonly("branch", &hct::SpectralForm::branch);

  m.def("spectralize", &hct::spectralize,
        "The t-spectralization sigma_t(h) with its branch tag.");
  m.def("spectral_form", &hct::spectral_form,
        "The diagonal spectral pair of h.");
  m.def("spectrum", &hct::spectrum,
        "The unordered eigenvalue pair of the realization.");
  m.def("spectral_related", &hct::spectral_related, py::arg("h1"),
        py::arg("h2"), py::arg("tol") = hct::kPredicateTol,
        "Whether sigma_t(h1) and sigma_t(h2) coincide within tol.");
  m.def("similarity_witness", &hct::similarity_witness,
        "A verified q with realize(q)^-1 realize(h) realize(q) equal to the "
        "spectral form, or None.");

  // --- operators -----------------------------------------------------------
  py::class_<hct::MulOperator>(m, "MulOperator")
      .def_readonly("symbol", &hct::MulOperator::symbol)
      .def(
          "matrix",
          [](const hct::MulOperator& op) {
            Matrix4 rows{};
            for (int r = 0; r < 4; ++r)
              for (int c = 0; c < 4; ++c) rows[r][c] = op.matrix4(r, c);
            return rows;
          },
          "The concrete 4x4 real matrix acting on coordinates (x, y, u, v).")
      .def("__repr__", [](const hct::MulOperator& op) {
        return "MulOperator(symbol=Hypercomplex(" + fmt_cplx(op.symbol.a) +
               ", " + fmt_cplx(op.symbol.b) +
               ", t=" + fmt_real(op.symbol.scale.t()) + "))";
      });

  m.def("make_operator", &hct::make_operator,
        "The multiplication operator M_eta as a concrete 4x4 real matrix.");
  m.def("apply", &hct::apply, "Apply a multiplication operator.");
  m.def("op_adjoint", &hct::op_adjoint, "The adjoint M_{conj(eta)}.");
  m.def("op_norm", &hct::op_norm, "Operator norm = symbol semi-norm.");
  m.def("is_self_adjoint", &hct::is_self_adjoint, py::arg("op"),
        py::arg("tol") = hct::kPredicateTol);
  m.def("is_projection", &hct::is_projection, py::arg("op"),
        py::arg("tol") = hct::kPredicateTol);
  m.def("is_normal", &hct::is_normal, py::arg("op"),
        py::arg("tol") = hct::kPredicateTol);
  m.def("is_unitary", &hct::is_unitary, py::arg("op"),
        py::arg("tol") = hct::kPredicateTol);

  // --- free probability ------------------------------------------------
  m.def(
      "free_moment_direct",
      [](const hct::Hypercomplex& h, const std::string& word) {
        return hct::free_moment_direct(h, hct::MomentWord::parse(word));
      },
      py::arg("h"), py::arg("word"),
      "tau of the word product; word letters are 'P' (plain) and 'S' "
      "(star).");
  m.def(
      "free_moment_closed",
      [](const hct::Hypercomplex& h, const std::string& word) {
        return hct::free_moment_closed(h, hct::MomentWord::parse(word));
      },
      py::arg("h"), py::arg("word"),
      "The closed form r^n cos(sum of signed angles), or None when h is "
      "not verifiably similar to its spectral form.");
  m.def(
      "all_words",
      [](std::size_t n) {
        std::vector<std::string> words;
        for (const hct::MomentWord& w : hct::all_words(n))
          words.push_back(w.str());
        return words;
      },
      py::arg("n"), "All words of length n over {'P', 'S'}, lexicographic.");

  // --- hyperbolic subring ----------------------------------------------
  py::class_<hct::Hyperbolic>(m, "Hyperbolic")
      .def(py::init([](double x, double y, hct::Scale scale) {
             return hct::Hyperbolic{x, y, scale};
           }),
           py::arg("x"), py::arg("y"), py::arg("scale"))
      .def_readwrite("x", &hct::Hyperbolic::x)
      .def_readwrite("y", &hct::Hyperbolic::y)
      .def_readonly("scale", &hct::Hyperbolic::scale)
      .def("__add__", &hct::hadd)
      .def("__sub__", &hct::hsub)
      .def("__neg__", &hct::hneg)
      .def("__mul__", &hct::hmul)
      .def("__rmul__",
           [](const hct::Hyperbolic& w, double r) { return hct::hscale(r, w); })
      .def("__repr__", [](const hct::Hyperbolic& w) {
        return "Hyperbolic(" + fmt_real(w.x) + ", " + fmt_real(w.y) +
               ", t=" + fmt_real(w.scale.t()) + ")";
      });

  m.def("embed", &hct::embed, "Embed D_t into H_t.");
  m.def("project", &hct::project,
        "Project H_t onto D_t; raises NotInRealization off the subring.");
  m.def("hadd", &hct::hadd);
  m.def("hsub", &hct::hsub);
  m.def("hneg", &hct::hneg);
  m.def("hscale", &hct::hscale, py::arg("r"), py::arg("w"));
  m.def("hmul", &hct::hmul, "The commutative t-product on real pairs.");
  m.def("hdet", &hct::hdet, "x^2 - t y^2.");
  m.def("hseminorm", &hct::hseminorm, "sqrt(|x^2 - t y^2|).");
  m.def("jt", &hct::jt, "The imaginary-like unit j_t = (0, 1).");
  m.def("jt_power", &hct::jt_power, py::arg("n"), py::arg("scale"),
        "j_t^n for n >= 1.");
  m.def("exp_jt_series", &hct::exp_jt_series, py::arg("theta"),
        py::arg("scale"), py::arg("terms") = 40,
        "Partial sum of the exponential series.");
  m.def("exp_jt", &hct::exp_jt, py::arg("theta"), py::arg("scale"),
        "Closed-form scaled exponential e^{j_t theta}; always unit-norm.");
  m.def("unit_set_membership", &hct::unit_set_membership, py::arg("w"),
        py::arg("tol") = hct::kPredicateTol,
        "Whether | |x^2 - t y^2| - 1 | <= tol.");

  py::enum_<hct::UnitBranch>(m, "UnitBranch")
      .value("UPPER", hct::UnitBranch::Upper)
      .value("LOWER", hct::UnitBranch::Lower)
      .value("LINE_POS", hct::UnitBranch::LinePos)
      .value("LINE_NEG", hct::UnitBranch::LineNeg)
      .value("PLUS_UPPER", hct::UnitBranch::PlusUpper)
      .value("PLUS_LOWER", hct::UnitBranch::PlusLower)
      .value("MINUS_UPPER", hct::UnitBranch::MinusUpper)
      .value("MINUS_LOWER", hct::UnitBranch::MinusLower);

  py::class_<hct::UnitSample>(m, "UnitSample")
      .def_readonly("point", &hct::UnitSample::point)
      .def_readonly("branch", &hct::UnitSample::branch);

  m.def(
      "sample_unit_set",
      [](hct::Scale scale, int count, double lo, double hi) {
        return hct::sample_unit_set(scale, count, {lo, hi});
      },
      py::arg("scale"), py::arg("count"), py::arg("lo") = -2.0,
      py::arg("hi") = 2.0,
      "Deterministic samples of the unit set T_t with parameters in "
      "[lo, hi].");

  py::enum_<hct::Sector>(m, "Sector")
      .value("POS_REAL", hct::Sector::PosReal)
      .value("NEG_REAL", hct::Sector::NegReal)
      .value("POS_IMAG", hct::Sector::PosImag)
      .value("NEG_IMAG", hct::Sector::NegImag);

  py::class_<hct::PolarDecomposition>(m, "PolarDecomposition")
      .def_readonly("radius", &hct::PolarDecomposition::radius)
      .def_readonly("angle", &hct::PolarDecomposition::angle)
      .def_readonly("sector", &hct::PolarDecomposition::sector)
      .def("__repr__", [](const hct::PolarDecomposition& p) {
        return "PolarDecomposition(radius=" + fmt_real(p.radius) +
               ", angle=" + fmt_real(p.angle) + ", sector=" +
               hct::to_string(p.sector) + ")";
      });

  m.def("polar_decompose", &hct::polar_decompose,
        "Polar data of an off-null-cone element; raises NullCone otherwise.");
  m.def("sector_unit", &hct::sector_unit, py::arg("sector"), py::arg("scale"),
        "The unit element of a polar sector.");
  m.def("recompose", &hct::recompose, py::arg("polar"), py::arg("scale"),
        "sector_unit * (radius * e^{j_t angle}).");

  // --- matrix action -------------------------------------------------------
  py::class_<hct::RealMatrix2>(m, "RealMatrix2")
      .def(py::init([](double a11, double a12, double a21, double a22) {
             return hct::RealMatrix2{a11, a12, a21, a22};
           }),
           py::arg("a11"), py::arg("a12"), py::arg("a21"), py::arg("a22"))
      .def_readwrite("a11", &hct::RealMatrix2::a11)
      .def_readwrite("a12", &hct::RealMatrix2::a12)
      .def_readwrite("a21", &hct::RealMatrix2::a21)
      .def_readwrite("a22", &hct::RealMatrix2::a22)
      .def("__matmul__",
           py::overload_cast<const hct::RealMatrix2&, const hct::RealMatrix2&>(
               &hct::matmul))
      .def("__repr__", [](const hct::RealMatrix2& a) {
        return "RealMatrix2(" + fmt_real(a.a11) + ", " + fmt_real(a.a12) +
               ", " + fmt_real(a.a21) + ", " + fmt_real(a.a22) + ")";
      });

  m.def("matrix_det", py::overload_cast<const hct::RealMatrix2&>(&hct::det),
        "Determinant of a real 2x2 matrix.");
  m.def("matmul",
        py::overload_cast<const hct::RealMatrix2&, const hct::RealMatrix2&>(
            &hct::matmul),
        "Product of real 2x2 matrices.");
  m.def("act", &hct::act, py::arg("A"), py::arg("w"),
        "The linear action A.(x, y) on D_t.");
  m.def("image_invertible", &hct::image_invertible, py::arg("A"),
        py::arg("w"), "Whether act(A, w) is invertible in D_t.");

  py::class_<hct::SlopeLine>(m, "SlopeLine")
      .def_readonly("vertical", &hct::SlopeLine::vertical)
      .def_readonly("slope", &hct::SlopeLine::slope)
      .def("__repr__", [](const hct::SlopeLine& line) {
        return line.vertical ? std::string("SlopeLine(x=0)")
                             : "SlopeLine(y=" + fmt_real(line.slope) + "x)";
      });

  py::class_<hct::SingularDirections> sd(m, "SingularDirections");
  py::enum_<hct::SingularDirections::Regime>(sd, "Regime")
      .value("WHOLE_SPACE_IF_SINGULAR_MATRIX",
             hct::SingularDirections::Regime::WholeSpaceIfSingularMatrix)
      .value("LINE_PAIR", hct::SingularDirections::Regime::LinePair);
  sd.def_readonly("regime", &hct::SingularDirections::regime)
      .def_readonly("lines", &hct::SingularDirections::lines);

  m.def("singular_directions", &hct::singular_directions, py::arg("A"),
        py::arg("scale"),
        "The directions A maps onto the null cone of D_t.");
  m.def("image_spectral_value", &hct::image_spectral_value, py::arg("A"),
        py::arg("w"), "sigma_t of act(A, w).");

  // --- tolerances ----------------------------------------------------------
  m.attr("SINGULAR_EPS") = hct::kSingularEps;
  m.attr("PREDICATE_TOL") = hct::kPredicateTol;
  m.attr("WITNESS_VERIFY_TOL") = hct::kWitnessVerifyTol;

#ifdef HCT_VERSION_INFO
  m.attr("__version__") = MACRO_STRINGIFY(HCT_VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
