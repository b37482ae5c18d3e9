#include "mgl/numeric.hpp"

#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mgl {

PrecisionScope::PrecisionScope(unsigned digits10) : saved_(Real::default_precision()) {
  Real::default_precision(digits10);
}

PrecisionScope::~PrecisionScope() { Real::default_precision(saved_); }

unsigned current_digits() { return Real::default_precision(); }

Real unit_roundoff() {
  thread_local unsigned cached_digits = 0;
  thread_local Real cached;
  const unsigned d = Real::default_precision();
  if (d != cached_digits) {
    Real u = 1;
    const long bits = static_cast<long>(mpfr_get_prec(u.backend().data()));
    cached = ldexp(u, static_cast<int>(1 - bits));
    cached_digits = d;
  }
  return cached;
}

Real to_current(const Real& x) {
  Real r;
  mpfr_set(r.backend().data(), x.backend().data(), MPFR_RNDN);
  return r;
}

Real to_real(const Rational& q) {
  Real r;
  mpfr_set_q(r.backend().data(), q.backend().data(), MPFR_RNDN);
  return r;
}

Real pow10(int e) {
  Real r = 10;
  return pow(r, e);
}

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

bool is_integer_literal(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

bool is_decimal_literal(const std::string& raw) {
  const std::string s = trim(raw);
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool digits = false;
  bool dot = false;
  for (; i < s.size(); ++i) {
    const char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits = true;
    } else if (c == '.' && !dot) {
      dot = true;
    } else if ((c == 'e' || c == 'E') && digits) {
      return is_integer_literal(s.substr(i + 1));
    } else {
      return false;
    }
  }
  return digits;
}

bool parse_fraction(const std::string& raw, Rational& out) {
  const std::string s = trim(raw);
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_literal(s)) return false;
    out = Rational(Integer(s));
    return true;
  }
  const std::string num = trim(s.substr(0, slash));
  const std::string den = trim(s.substr(slash + 1));
  if (!is_integer_literal(num) || !is_integer_literal(den)) return false;
  const Integer d(den);
  if (d == 0) return false;
  out = Rational(Integer(num), d);
  return true;
}

Real parse_real(const std::string& raw) {
  const std::string s = trim(raw);
  Rational q;
  if (parse_fraction(s, q)) return to_real(q);
  if (!is_decimal_literal(s)) throw std::invalid_argument("not a number: '" + raw + "'");
  Real r;
  mpfr_set_str(r.backend().data(), s.c_str(), 10, MPFR_RNDN);
  return r;
}

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

std::string to_sci(const Real& x, int digits) {
  return x.str(static_cast<std::streamsize>(digits), std::ios_base::scientific);
}

std::string to_sig(const Real& x, int digits) {
  if (x == 0) return "0";
  const long e = static_cast<long>(std::floor(std::log10(std::fabs(static_cast<double>(x)))));
  const long frac = std::max<long>(0, digits - 1 - e);
  return x.str(static_cast<std::streamsize>(frac), std::ios_base::fixed);
}

double agreeing_digits(const Real& a, const Real& b) {
  if (a == b) return 1000.0;
  const Real rel = abs(a - b) / (abs(b) == 0 ? Real(1) : abs(b));
  return -static_cast<double>(log10(rel));
}

namespace {

// Relative inflation that turns a round-to-nearest double result into an
// upper bound.
constexpr double round_up = 1.0 + 0x1p-51;

}  // namespace

Mag::Mag(double m, long e) {
  if (m == 0) return;
  int k = 0;
  m_ = std::frexp(m, &k);
  e_ = e + k;
}

Mag Mag::upper(const Real& x) {
  if (x == 0) return Mag();
  long e = 0;
  const double d = mpfr_get_d_2exp(&e, x.backend().data(), MPFR_RNDA);
  return Mag(std::abs(d) * round_up, e);
}

Mag Mag::pow2(long e) { return Mag(0.5, e + 1); }

Real Mag::to_real() const {
  Real r;
  mpfr_set_d(r.backend().data(), m_, MPFR_RNDU);
  mpfr_mul_2si(r.backend().data(), r.backend().data(), e_, MPFR_RNDU);
  return r;
}

Mag operator+(const Mag& a, const Mag& b) {
  if (a.m_ == 0) return b;
  if (b.m_ == 0) return a;
  const Mag& hi = a.e_ >= b.e_ ? a : b;
  const Mag& lo = a.e_ >= b.e_ ? b : a;
  const long d = hi.e_ - lo.e_;
  // For d > 60 the inflation of the larger term alone exceeds the smaller.
  const double m = d > 60 ? hi.m_ * round_up : (hi.m_ + std::ldexp(lo.m_, static_cast<int>(-d))) * round_up;
  return Mag(m, hi.e_);
}

Mag operator*(const Mag& a, const Mag& b) {
  if (a.m_ == 0 || b.m_ == 0) return Mag();
  return Mag(a.m_ * b.m_ * round_up, a.e_ + b.e_);
}

Ball::Ball() : mid(0) {}
Ball::Ball(const Real& m) : mid(m) {}
Ball::Ball(const Real& m, const Real& r) : mid(m), rad(Mag::upper(r)) {}
Ball::Ball(const Real& m, const Mag& r) : mid(m), rad(r) {}

Ball Ball::rounded(const Real& m) { return Ball(m, abs(m) * unit_roundoff()); }

bool Ball::contains_zero() const {
  if (rad.is_zero()) return mid == 0;
  return mpfr_cmpabs(mid.backend().data(), radius().backend().data()) <= 0;
}

int Ball::sign() const {
  if (contains_zero()) return 0;
  return mid > 0 ? 1 : -1;
}

Real Ball::mag() const { return abs(mid) + radius(); }

namespace {

// Rounding error bound of a correctly rounded midpoint.
Mag rounding(const Real& mid) {
  return Mag::upper(mid) * Mag::pow2(1 - static_cast<long>(mpfr_get_prec(mid.backend().data())));
}

}  // namespace

Ball operator+(const Ball& a, const Ball& b) {
  Ball r;
  mpfr_add(r.mid.backend().data(), a.mid.backend().data(), b.mid.backend().data(), MPFR_RNDN);
  r.rad = a.rad + b.rad + rounding(r.mid);
  return r;
}

Ball operator-(const Ball& a, const Ball& b) {
  Ball r;
  mpfr_sub(r.mid.backend().data(), a.mid.backend().data(), b.mid.backend().data(), MPFR_RNDN);
  r.rad = a.rad + b.rad + rounding(r.mid);
  return r;
}

Ball operator-(const Ball& a) { return Ball(-a.mid, a.rad); }

Ball operator*(const Ball& a, const Ball& b) {
  Ball r;
  mpfr_mul(r.mid.backend().data(), a.mid.backend().data(), b.mid.backend().data(), MPFR_RNDN);
  r.rad = Mag::upper(a.mid) * b.rad + Mag::upper(b.mid) * a.rad + a.rad * b.rad + rounding(r.mid);
  return r;
}

Ball operator/(const Ball& a, const Ball& b) {
  if (b.contains_zero()) throw std::domain_error("ball division by a ball containing zero");
  // |a/b - a.mid/b.mid| <= (a.rad + |a.mid/b.mid| b.rad) / (|b.mid| - b.rad)
  Real lo;
  mpfr_abs(lo.backend().data(), b.mid.backend().data(), MPFR_RNDD);
  mpfr_sub(lo.backend().data(), lo.backend().data(), b.radius().backend().data(), MPFR_RNDD);
  Real inv;
  mpfr_ui_div(inv.backend().data(), 1, lo.backend().data(), MPFR_RNDU);
  Ball r;
  mpfr_div(r.mid.backend().data(), a.mid.backend().data(), b.mid.backend().data(), MPFR_RNDN);
  r.rad = (a.rad + Mag::upper(r.mid) * b.rad) * Mag::upper(inv) + rounding(r.mid);
  return r;
}

Jet operator+(const Jet& a, const Jet& b) { return {a.v + b.v, a.d + b.d, a.d2 + b.d2}; }
Jet operator-(const Jet& a, const Jet& b) { return {a.v - b.v, a.d - b.d, a.d2 - b.d2}; }
Jet operator*(const Jet& a, const Jet& b) {
  const Ball dd = a.d * b.d;
  return {a.v * b.v, a.d * b.v + a.v * b.d, a.d2 * b.v + (dd + dd) + a.v * b.d2};
}
Jet operator*(const Ball& c, const Jet& a) { return {c * a.v, c * a.d, c * a.d2}; }

}  // namespace mgl
