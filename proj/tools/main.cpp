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

// hct — batch calculator for the scale-parameterized hypercomplex ring H_t
// and its hyperbolic subring D_t.
//
// Exit codes: 0 success; 2 parse/usage error; 3 domain error (null cone,
// singular element, empty range).  Output is deterministic: identical
// invocations produce byte-identical bytes.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "hct/hct.hpp"
#include "parse.hpp"
#include "report.hpp"

namespace {

using hct::cli::Report;
using hct::cli::Table;
using hct::cli::Value;

struct CliConfig {
  double t = 0.0;
  double tol = 1e-10;
  std::string format = "json";
  int precision = 12;
  std::string out;  // empty = stdout
};

const char* to_string(hct::Part p) {
  return p == hct::Part::Invertible ? "invertible" : "singular";
}

const char* to_string(hct::SpectralSide s) {
  return s == hct::SpectralSide::Plus ? "plus" : "minus_zero";
}

const char* to_string(hct::Branch b) {
  return b == hct::Branch::ComplexBranch ? "complex" : "real_minus";
}

const char* to_string(hct::SingularDirections::Regime r) {
  return r == hct::SingularDirections::Regime::LinePair
             ? "line_pair"
             : "whole_space_if_singular_matrix";
}

void emit(const CliConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) throw hct::ParseError("cannot open output file '" + cfg.out + "'");
  file.write(text.data(), static_cast<std::streamsize>(text.size()));
}

void emit(const CliConfig& cfg, const Report& r) {
  emit(cfg, cfg.format == "csv" ? to_csv(r, cfg.precision)
                                : to_json(r, cfg.precision));
}

void emit(const CliConfig& cfg, const Table& t) {
  emit(cfg, cfg.format == "csv" ? to_csv(t, cfg.precision)
                                : to_json(t, cfg.precision));
}

void add_element_fields(Report& r, const hct::Hypercomplex& h) {
  r.add("a_re", Value::num(h.a.real()));
  r.add("a_im", Value::num(h.a.imag()));
  r.add("b_re", Value::num(h.b.real()));
  r.add("b_im", Value::num(h.b.imag()));
}

// --- subcommand bodies -----------------------------------------------------

void run_classify(const CliConfig& cfg, const std::string& literal) {
  const hct::Scale scale(cfg.t);
  const hct::Hypercomplex h = hct::cli::parse_hypercomplex(literal, scale);
  const hct::Classification cls = hct::classify(h);
  const hct::SpectralValue sigma = hct::spectralize(h);
  const auto spectrum = hct::spectrum(h);

  Report r;
  r.add("t", Value::num(cfg.t));
  add_element_fields(r, h);
  r.add("det", Value::num(hct::det(h)));
  r.add("seminorm", Value::num(hct::seminorm(h)));
  r.add("part", Value::str(to_string(cls.part)));
  r.add("spectral_side", Value::str(to_string(cls.spectral_side)));
  r.add("sigma_re", Value::num(sigma.value.real()));
  r.add("sigma_im", Value::num(sigma.value.imag()));
  r.add("sigma_branch", Value::str(to_string(sigma.branch)));
  r.add("spectrum_1_re", Value::num(spectrum[0].real()));
  r.add("spectrum_1_im", Value::num(spectrum[0].imag()));
  r.add("spectrum_2_re", Value::num(spectrum[1].real()));
  r.add("spectrum_2_im", Value::num(spectrum[1].imag()));
  emit(cfg, r);
}

void run_mul(const CliConfig& cfg, const std::string& lhs,
             const std::string& rhs) {
  const hct::Scale scale(cfg.t);
  const hct::Hypercomplex product =
      hct::mul(hct::cli::parse_hypercomplex(lhs, scale),
               hct::cli::parse_hypercomplex(rhs, scale));
  Report r;
  r.add("t", Value::num(cfg.t));
  add_element_fields(r, product);
  r.add("det", Value::num(hct::det(product)));
  r.add("seminorm", Value::num(hct::seminorm(product)));
  emit(cfg, r);
}

void run_inv(const CliConfig& cfg, const std::string& literal) {
  const hct::Scale scale(cfg.t);
  const hct::Hypercomplex inverse =
      hct::inverse(hct::cli::parse_hypercomplex(literal, scale));
  Report r;
  r.add("t", Value::num(cfg.t));
  add_element_fields(r, inverse);
  r.add("det", Value::num(hct::det(inverse)));
  r.add("seminorm", Value::num(hct::seminorm(inverse)));
  emit(cfg, r);
}

void run_spec(const CliConfig& cfg, const std::string& literal) {
  const hct::Scale scale(cfg.t);
  const hct::Hypercomplex h = hct::cli::parse_hypercomplex(literal, scale);
  const hct::SpectralValue sigma = hct::spectralize(h);
  const hct::SpectralForm form = hct::spectral_form(h);
  const auto spectrum = hct::spectrum(h);

  std::optional<hct::Hypercomplex> witness;
  try {
    witness = hct::similarity_witness(h);
  } catch (const hct::ZeroDivisor&) {
    // t = 0 with b != 0 has no witness formula; report absence rather
    // than fail the whole query.
  }

  Report r;
  r.add("t", Value::num(cfg.t));
  add_element_fields(r, h);
  r.add("sigma_re", Value::num(sigma.value.real()));
  r.add("sigma_im", Value::num(sigma.value.imag()));
  r.add("sigma_branch", Value::str(to_string(sigma.branch)));
  r.add("spectral_form_1_re", Value::num(form.diag[0].real()));
  r.add("spectral_form_1_im", Value::num(form.diag[0].imag()));
  r.add("spectral_form_2_re", Value::num(form.diag[1].real()));
  r.add("spectral_form_2_im", Value::num(form.diag[1].imag()));
  r.add("spectrum_1_re", Value::num(spectrum[0].real()));
  r.add("spectrum_1_im", Value::num(spectrum[0].imag()));
  r.add("spectrum_2_re", Value::num(spectrum[1].real()));
  r.add("spectrum_2_im", Value::num(spectrum[1].imag()));
  r.add("witness_found", Value::yes_no(witness.has_value()));
  r.add("witness_a_re",
        witness ? Value::num(witness->a.real()) : Value::null());
  r.add("witness_a_im",
        witness ? Value::num(witness->a.imag()) : Value::null());
  r.add("witness_b_re",
        witness ? Value::num(witness->b.real()) : Value::null());
  r.add("witness_b_im",
        witness ? Value::num(witness->b.imag()) : Value::null());
  emit(cfg, r);
}

void run_norm(const CliConfig& cfg, const std::string& literal) {
  const hct::Scale scale(cfg.t);
  const hct::Hypercomplex h = hct::cli::parse_hypercomplex(literal, scale);
  Report r;
  r.add("t", Value::num(cfg.t));
  add_element_fields(r, h);
  r.add("det", Value::num(hct::det(h)));
  r.add("seminorm", Value::num(hct::seminorm(h)));
  r.add("tau", Value::num(hct::trace_tau(h)));
  r.add("singular", Value::yes_no(hct::is_singular(h)));
  emit(cfg, r);
}

void run_moments(const CliConfig& cfg, const std::string& literal, int n) {
  if (n < 1 || n > 12)
    throw hct::RangeError("moments: --n must be in [1, 12]");
  const hct::Scale scale(cfg.t);
  const hct::Hypercomplex h = hct::cli::parse_hypercomplex(literal, scale);

  Table table;
  table.headers = {"word", "length", "direct", "closed", "abs_diff"};
  for (int k = 1; k <= n; ++k) {
    for (const hct::MomentWord& word :
         hct::all_words(static_cast<std::size_t>(k))) {
      const double direct = hct::free_moment_direct(h, word);
      const std::optional<double> closed = hct::free_moment_closed(h, word);
      table.rows.push_back(
          {Value::str(word.str()), Value::num(k), Value::num(direct),
           closed ? Value::num(*closed) : Value::null(),
           closed ? Value::num(std::abs(*closed - direct)) : Value::null()});
    }
  }
  emit(cfg, table);
}

void run_exp(const CliConfig& cfg, const std::string& theta_literal) {
  const hct::Scale scale(cfg.t);
  const double theta = hct::cli::parse_real(theta_literal);
  if (!std::isfinite(theta))
    throw hct::ParseError("theta must be finite: '" + theta_literal + "'");
  const hct::Hyperbolic e = hct::exp_jt(theta, scale);
  Report r;
  r.add("t", Value::num(cfg.t));
  r.add("theta", Value::num(theta));
  r.add("x", Value::num(e.x));
  r.add("y", Value::num(e.y));
  r.add("det", Value::num(hct::hdet(e)));
  r.add("seminorm", Value::num(hct::hseminorm(e)));
  r.add("unit_member", Value::yes_no(hct::unit_set_membership(e, cfg.tol)));
  emit(cfg, r);
}

void run_polar(const CliConfig& cfg, const std::string& literal) {
  const hct::Scale scale(cfg.t);
  const hct::Hyperbolic w = hct::cli::parse_hyperbolic(literal, scale);
  const hct::PolarDecomposition p = hct::polar_decompose(w);
  const hct::Hyperbolic back = hct::recompose(p, scale);
  Report r;
  r.add("t", Value::num(cfg.t));
  r.add("x", Value::num(w.x));
  r.add("y", Value::num(w.y));
  r.add("radius", Value::num(p.radius));
  r.add("angle", Value::num(p.angle));
  r.add("sector", Value::str(hct::to_string(p.sector)));
  r.add("recomposed_x", Value::num(back.x));
  r.add("recomposed_y", Value::num(back.y));
  emit(cfg, r);
}

void run_unitset(const CliConfig& cfg, int count,
                 const std::string& range_literal) {
  const hct::Scale scale(cfg.t);
  const hct::Interval range = hct::cli::parse_range(range_literal);
  const std::vector<hct::UnitSample> samples =
      hct::sample_unit_set(scale, count, range);
  Table table;
  table.headers = {"x", "y", "branch"};
  for (const hct::UnitSample& s : samples) {
    table.rows.push_back({Value::num(s.point.x), Value::num(s.point.y),
                          Value::str(hct::to_string(s.branch))});
  }
  emit(cfg, table);
}

void run_act(const CliConfig& cfg, const std::string& matrix_literal,
             const std::string& point_literal) {
  const hct::Scale scale(cfg.t);
  const std::vector<double> m = hct::cli::parse_reals(matrix_literal, 4);
  const hct::RealMatrix2 A{m[0], m[1], m[2], m[3]};
  const hct::Hyperbolic w = hct::cli::parse_hyperbolic(point_literal, scale);

  const hct::Hyperbolic image = hct::act(A, w);
  const hct::SpectralValue sigma = hct::image_spectral_value(A, w);
  const hct::SingularDirections dirs = hct::singular_directions(A, scale);

  auto line_text = [&cfg](const hct::SlopeLine& line) {
    if (line.vertical) return std::string("x=0");
    return "y=" + hct::cli::format_number(line.slope, cfg.precision) + "x";
  };

  Report r;
  r.add("t", Value::num(cfg.t));
  r.add("image_x", Value::num(image.x));
  r.add("image_y", Value::num(image.y));
  r.add("image_det", Value::num(hct::hdet(image)));
  r.add("image_invertible", Value::yes_no(hct::image_invertible(A, w)));
  r.add("sigma_re", Value::num(sigma.value.real()));
  r.add("sigma_im", Value::num(sigma.value.imag()));
  r.add("sigma_branch", Value::str(to_string(sigma.branch)));
  r.add("matrix_det", Value::num(hct::det(A)));
  r.add("singular_regime", Value::str(to_string(dirs.regime)));
  r.add("line_1", dirs.lines.size() > 0 ? Value::str(line_text(dirs.lines[0]))
                                        : Value::null());
  r.add("line_2", dirs.lines.size() > 1 ? Value::str(line_text(dirs.lines[1]))
                                        : Value::null());
  emit(cfg, r);
}

// --- dispatch ---------------------------------------------------------------

int guarded(const std::function<void()>& body) {
  try {
    body();
    return 0;
  } catch (const hct::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const hct::RangeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const hct::EmptyRange& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const hct::NullCone& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const hct::SingularElement& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const hct::ZeroDivisor& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const hct::NotInRealization& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const hct::ScaleMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "hct — calculator for the scale-parameterized hypercomplex ring H_t\n"
      "and its hyperbolic subring D_t.  Elements are flat comma-separated\n"
      "reals: \"a_re,a_im,b_re,b_im\" in H_t, \"x,y\" in D_t."};
  app.fallthrough();
  app.require_subcommand(1);

  CliConfig cfg;
  app.add_option("--t", cfg.t, "scale parameter t of the ring (required)")
      ->required();
  app.add_option("--tol", cfg.tol,
                 "tolerance for boolean verdict fields (default 1e-10)")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "output format (default json)")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--precision", cfg.precision,
                 "printed significant digits (default 12)")
      ->check(CLI::Range(1, 17));
  app.add_option("--out", cfg.out, "write output to this file (default stdout)");
  app.footer(
      "Exit codes: 0 success, 2 parse/usage error, 3 domain error\n"
      "(null cone, singular element, empty range).\n"
      "Field names are identical in JSON and CSV output.");

  std::string literal;
  std::string rhs_literal;
  int moments_n = 0;
  int unitset_count = 0;
  std::string range_literal = "-2:2";

  CLI::App* c_classify = app.add_subcommand(
      "classify",
      "Classify an element of H_t.\nFields: t, a_re, a_im, b_re, b_im, det, "
      "seminorm, part, spectral_side,\nsigma_re, sigma_im, sigma_branch, "
      "spectrum_1_re, spectrum_1_im,\nspectrum_2_re, spectrum_2_im");
  c_classify->add_option("element", literal, "a_re,a_im,b_re,b_im")
      ->required();

  CLI::App* c_mul = app.add_subcommand(
      "mul",
      "t-product of two elements of H_t.\nFields: t, a_re, a_im, b_re, b_im, "
      "det, seminorm");
  c_mul->add_option("lhs", literal, "a_re,a_im,b_re,b_im")->required();
  c_mul->add_option("rhs", rhs_literal, "a_re,a_im,b_re,b_im")->required();

  CLI::App* c_inv = app.add_subcommand(
      "inv",
      "Multiplicative inverse in H_t (exit 3 on singular elements).\n"
      "Fields: t, a_re, a_im, b_re, b_im, det, seminorm");
  c_inv->add_option("element", literal, "a_re,a_im,b_re,b_im")->required();

  CLI::App* c_spec = app.add_subcommand(
      "spec",
      "Spectral data: sigma_t, spectral form, spectrum, similarity witness."
      "\nFields: t, a_re, a_im, b_re, b_im, sigma_re, sigma_im, sigma_branch,"
      "\nspectral_form_{1,2}_{re,im}, spectrum_{1,2}_{re,im}, witness_found,"
      "\nwitness_{a,b}_{re,im} (null when no witness exists)");
  c_spec->add_option("element", literal, "a_re,a_im,b_re,b_im")->required();

  CLI::App* c_norm = app.add_subcommand(
      "norm",
      "Determinant, semi-norm, trace, and singularity verdict.\nFields: t, "
      "a_re, a_im, b_re, b_im, det, seminorm, tau, singular");
  c_norm->add_option("element", literal, "a_re,a_im,b_re,b_im")->required();

  CLI::App* c_moments = app.add_subcommand(
      "moments",
      "Free moments tau(h^{r_1} ... h^{r_k}) for every word over {P,S} of\n"
      "length <= n (P = plain, S = star/conjugate).  Closed-form column is\n"
      "null/n/a when the similarity hypothesis fails.\nColumns: word, "
      "length, direct, closed, abs_diff");
  c_moments->add_option("element", literal, "a_re,a_im,b_re,b_im")->required();
  c_moments->add_option("--n", moments_n, "maximum word length, in [1, 12]")
      ->required();

  CLI::App* c_exp = app.add_subcommand(
      "exp",
      "Scaled exponential e^{j_t theta} in D_t.\nFields: t, theta, x, y, "
      "det, seminorm, unit_member");
  c_exp->add_option("theta", literal, "real angle parameter")->required();

  CLI::App* c_polar = app.add_subcommand(
      "polar",
      "Polar decomposition in D_t (exit 3 on the null cone).\nFields: t, x, "
      "y, radius, angle, sector, recomposed_x, recomposed_y");
  c_polar->add_option("point", literal, "x,y")->required();

  CLI::App* c_unitset = app.add_subcommand(
      "unitset",
      "Sample the unit set T_t = {w in D_t : ||w||_t = 1}.\nColumns: x, y, "
      "branch");
  c_unitset->add_option("--count", unitset_count, "number of samples, >= 2")
      ->required()
      ->check(CLI::Range(2, 100000000));
  c_unitset->add_option("--range", range_literal,
                        "parameter range lo:hi (default -2:2; x for t != 0, "
                        "y for t = 0)");

  CLI::App* c_act = app.add_subcommand(
      "act",
      "Apply a real 2x2 matrix to a point of D_t and report the image,\n"
      "its invertibility and spectral value, and the matrix's singular\n"
      "directions.\nFields: t, image_x, image_y, image_det, "
      "image_invertible, sigma_re,\nsigma_im, sigma_branch, matrix_det, "
      "singular_regime, line_1, line_2");
  c_act->add_option("matrix", literal, "a11,a12,a21,a22")->required();
  c_act->add_option("point", rhs_literal, "x,y")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (c_classify->parsed())
    return guarded([&] { run_classify(cfg, literal); });
  if (c_mul->parsed())
    return guarded([&] { run_mul(cfg, literal, rhs_literal); });
  if (c_inv->parsed()) return guarded([&] { run_inv(cfg, literal); });
  if (c_spec->parsed()) return guarded([&] { run_spec(cfg, literal); });
  if (c_norm->parsed()) return guarded([&] { run_norm(cfg, literal); });
  if (c_moments->parsed())
    return guarded([&] { run_moments(cfg, literal, moments_n); });
  if (c_exp->parsed()) return guarded([&] { run_exp(cfg, literal); });
  if (c_polar->parsed()) return guarded([&] { run_polar(cfg, literal); });
  if (c_unitset->parsed())
    return guarded([&] { run_unitset(cfg, unitset_count, range_literal); });
  if (c_act->parsed())
    return guarded([&] { run_act(cfg, literal, rhs_literal); });

  std::cerr << "error: no subcommand selected\n";
  return 2;
}
