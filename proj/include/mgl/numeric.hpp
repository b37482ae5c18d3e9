// Numeric foundation: exact rationals, variable-precision reals and
// midpoint-radius balls used for error propagation.
#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace mgl {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

// Sets the default precision (decimal digits) for newly created reals and
// restores the previous value on scope exit.
class PrecisionScope {
public:
  explicit PrecisionScope(unsigned digits10);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
  unsigned saved_;
};

unsigned current_digits();

// Unit roundoff 2^(1-bits) at the current default precision.
Real unit_roundoff();

// Converts to the current default precision (a plain copy keeps the source
// precision).
Real to_current(const Real& x);
Real to_real(const Rational& q);
Real pow10(int e);

// Parses "a/b", "a" or a decimal literal. Returns false when the text is not
// an exact rational literal (decimal literals are exact rationals too, but
// the caller decides whether they are treated as such).
bool parse_fraction(const std::string& text, Rational& out);
bool is_decimal_literal(const std::string& text);
Real parse_real(const std::string& text);

std::string to_string(const Rational& q);
// Scientific notation with the given number of significant digits.
std::string to_sci(const Real& x, int digits);
// Fixed notation with the given number of significant digits.
std::string to_sig(const Real& x, int digits);

// Number of significant decimal digits to which a agrees with b.
double agreeing_digits(const Real& a, const Real& b);

// Non-negative upper bound m 2^e with a double mantissa m in [1/2, 1) (or
// zero) and an unbounded exponent. Every operation rounds upward.
class Mag {
public:
  Mag() = default;
  static Mag upper(const Real& x);  // upper bound of |x|
  static Mag pow2(long e);
  Real to_real() const;  // exact, at the current precision
  bool is_zero() const { return m_ == 0; }

  friend Mag operator+(const Mag& a, const Mag& b);
  friend Mag operator*(const Mag& a, const Mag& b);
  Mag& operator+=(const Mag& b) { return *this = *this + b; }

private:
  Mag(double m, long e);
  double m_ = 0;
  long e_ = 0;
};

// Midpoint-radius enclosure. The radius absorbs rounding errors of every
// operation through a relative inflation by the unit roundoff.
struct Ball {
  Real mid;
  Mag rad;

  Ball();
  Ball(const Real& m);  // exact value, zero radius
  Ball(const Real& m, const Real& r);
  Ball(const Real& m, const Mag& r);

  // Ball around a value that was correctly rounded at the current precision.
  static Ball rounded(const Real& m);

  Real radius() const { return rad.to_real(); }
  void widen(const Real& r) { rad += Mag::upper(r); }
  bool contains_zero() const;
  int sign() const;  // 0 when the sign is undetermined
  Real mag() const;  // |mid| + rad
};

Ball operator+(const Ball& a, const Ball& b);
Ball operator-(const Ball& a, const Ball& b);
Ball operator-(const Ball& a);
Ball operator*(const Ball& a, const Ball& b);
Ball operator/(const Ball& a, const Ball& b);

// Second-order jet: value, first and second derivative balls with respect
// to z.
struct Jet {
  Ball v;
  Ball d;
  Ball d2;
};

Jet operator+(const Jet& a, const Jet& b);
Jet operator-(const Jet& a, const Jet& b);
Jet operator*(const Jet& a, const Jet& b);
Jet operator*(const Ball& c, const Jet& a);

}  // namespace mgl
