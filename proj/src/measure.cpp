#include "mgl/measure.hpp"

#include "mgl/errors.hpp"

#include <sstream>
#include <vector>

namespace mgl {

std::string to_string(Backend b) {
  return b == Backend::exact_rational ? "exact-rational" : "high-precision-real";
}

namespace {

constexpr int guard_digits = 20;

std::string trimmed(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

void check_real_constraints(const MeasureParams& p) {
  PrecisionScope scope(static_cast<unsigned>(p.working_digits() + guard_digits));
  const RealParams v = p.real();
  if (v.r1 <= 0 || v.r2 <= 0) throw ValidationError("contraction ratios must be positive");
  if (v.m1 <= 0 || v.m2 <= 0) throw ValidationError("weights must be positive");
  if (v.r1 + v.r2 > 1 + pow10(1 - p.working_digits()))
    throw ValidationError("r1 + r2 > 1: overlapping maps are not supported");
  if (abs(v.m1 + v.m2 - 1) > pow10(1 - p.working_digits()))
    throw ValidationError("weights must satisfy m1 + m2 = 1");
}

}  // namespace

MeasureParams MeasureParams::validate(const std::array<std::string, 4>& raw, int working_digits) {
  if (working_digits < 5) throw ValidationError("working digits must be at least 5");
  MeasureParams p;
  p.working_digits_ = working_digits;
  for (int i = 0; i < 4; ++i) p.text_[i] = trimmed(raw[i]);

  const bool nat2 = p.text_[2] == "natural";
  const bool nat3 = p.text_[3] == "natural";
  if (nat2 != nat3) throw ValidationError("'natural' must be given for both weights");
  p.natural_ = nat2;

  bool all_rational = !p.natural_;
  const int count = p.natural_ ? 2 : 4;
  for (int i = 0; i < count; ++i) {
    Rational q;
    if (parse_fraction(p.text_[i], q)) {
      p.exact_[i] = q;
      p.text_[i] = to_string(q);
    } else if (is_decimal_literal(p.text_[i])) {
      all_rational = false;
    } else {
      throw ValidationError("cannot parse parameter '" + raw[i] + "'");
    }
  }
  p.backend_ = all_rational ? Backend::exact_rational : Backend::high_precision_real;

  if (p.is_exact()) {
    const auto& [r1, r2, m1, m2] = p.exact_;
    if (r1 <= 0 || r2 <= 0) throw ValidationError("contraction ratios must be positive");
    if (m1 <= 0 || m2 <= 0) throw ValidationError("weights must be positive");
    if (r1 + r2 > 1) throw ValidationError("r1 + r2 > 1: overlapping maps are not supported");
    if (m1 + m2 != 1) throw ValidationError("weights must satisfy m1 + m2 = 1");
  } else {
    check_real_constraints(p);
  }
  return p;
}

MeasureParams MeasureParams::parse(const std::string& csv, int working_digits) {
  std::vector<std::string> parts;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (parts.size() != 4) throw ValidationError("expected four parameters r1,r2,m1,m2");
  return validate({parts[0], parts[1], parts[2], parts[3]}, working_digits);
}

MeasureParams MeasureParams::exact(const Rational& r1, const Rational& r2, const Rational& m1,
                                   const Rational& m2, int working_digits) {
  return validate({to_string(r1), to_string(r2), to_string(m1), to_string(m2)}, working_digits);
}

MeasureParams MeasureParams::with_digits(int working_digits) const {
  MeasureParams p = *this;
  p.working_digits_ = working_digits;
  return p;
}

const std::array<Rational, 4>& MeasureParams::rationals() const {
  if (!is_exact()) throw ComputationError("parameters are not exact rationals");
  return exact_;
}

RealParams MeasureParams::real() const {
  RealParams v;
  if (is_exact()) {
    v.r1 = to_real(exact_[0]);
    v.r2 = to_real(exact_[1]);
    v.m1 = to_real(exact_[2]);
    v.m2 = to_real(exact_[3]);
    return v;
  }
  v.r1 = parse_real(text_[0]);
  v.r2 = parse_real(text_[1]);
  if (natural_) {
    const Real d = similarity_dimension(v.r1, v.r2);
    v.m1 = pow(v.r1, d);
    v.m2 = 1 - v.m1;
  } else {
    v.m1 = parse_real(text_[2]);
    v.m2 = parse_real(text_[3]);
  }
  return v;
}

std::string MeasureParams::canonical() const {
  return text_[0] + "," + text_[1] + "," + text_[2] + "," + text_[3];
}

Real similarity_dimension(const Real& r1, const Real& r2) {
  // Newton iteration on f(d) = r1^d + r2^d - 1, which is convex and
  // decreasing, so iterates from the left converge monotonically.
  const Real l1 = log(r1);
  const Real l2 = log(r2);
  Real d = 0;
  const Real eps = unit_roundoff() * 16;
  for (int it = 0; it < 10000; ++it) {
    const Real a = pow(r1, d);
    const Real b = pow(r2, d);
    const Real step = (a + b - 1) / (a * l1 + b * l2);
    d -= step;
    if (abs(step) <= eps * abs(d)) break;
  }
  return d;
}

namespace {

bool approx_equal(const Real& a, const Real& b, const Real& tol) { return abs(a - b) <= tol; }

}  // namespace

MeasureClass classify(const MeasureParams& params) {
  MeasureClass c;
  if (params.is_exact()) {
    const auto& [r1, r2, m1, m2] = params.rationals();
    c.is_lebesgue = r1 == m1 && r2 == m2 && r1 + r2 == 1;
    c.is_symmetric = r1 == r2 && m1 == m2;
    c.has_renormalization = r1 * m1 == r2 * m2;
    c.dirichlet_equals_neumann = r1 == m2 && r2 == m1;
    if (c.has_renormalization) {
      c.renorm_factor_exact = 1 / (r1 * m1);
      PrecisionScope scope(static_cast<unsigned>(params.working_digits() + guard_digits));
      c.renorm_factor = to_real(*c.renorm_factor_exact);
    }
    return c;
  }
  PrecisionScope scope(static_cast<unsigned>(params.working_digits() + guard_digits));
  const RealParams v = params.real();
  const Real tol = pow10(5 - params.working_digits());
  c.is_lebesgue = approx_equal(v.r1, v.m1, tol) && approx_equal(v.r2, v.m2, tol) &&
                  approx_equal(v.r1 + v.r2, Real(1), tol);
  c.is_symmetric = approx_equal(v.r1, v.r2, tol) && approx_equal(v.m1, v.m2, tol);
  c.has_renormalization = approx_equal(v.r1 * v.m1, v.r2 * v.m2, tol);
  c.dirichlet_equals_neumann = approx_equal(v.r1, v.m2, tol) && approx_equal(v.r2, v.m1, tol);
  if (c.has_renormalization) c.renorm_factor = 1 / (v.r1 * v.m1);
  return c;
}

}  // namespace mgl
