// Parameters (r1, r2, m1, m2) of the self-similar measure
// mu = m1 * mu o S1^-1 + m2 * mu o S2^-1 with S1(x) = r1 x and
// S2(x) = r2 x + 1 - r2, their validation and structural classification.
#pragma once

#include "mgl/numeric.hpp"

#include <array>
#include <optional>
#include <string>

namespace mgl {

enum class Backend { exact_rational, high_precision_real };

std::string to_string(Backend b);

struct RealParams {
  Real r1, r2, m1, m2;
};

class MeasureParams {
public:
  static constexpr int default_digits = 50;

  // Accepts "a/b", integers and decimal literals. All four rational gives
  // the exact backend; any decimal literal selects the real backend. The
  // token "natural" for both weights sets m_i = r_i^d with r1^d + r2^d = 1.
  static MeasureParams validate(const std::array<std::string, 4>& raw,
                                int working_digits = default_digits);
  // Parses the comma separated form "r1,r2,m1,m2".
  static MeasureParams parse(const std::string& csv, int working_digits = default_digits);
  static MeasureParams exact(const Rational& r1, const Rational& r2, const Rational& m1,
                             const Rational& m2, int working_digits = default_digits);

  Backend backend() const { return backend_; }
  bool is_exact() const { return backend_ == Backend::exact_rational; }
  bool natural_weights() const { return natural_; }
  int working_digits() const { return working_digits_; }
  MeasureParams with_digits(int working_digits) const;

  // Exact values; throws for the real backend.
  const std::array<Rational, 4>& rationals() const;
  // Values at the current default precision.
  RealParams real() const;
  // Canonical text "r1,r2,m1,m2" (reduced fractions or the given decimals).
  std::string canonical() const;
  const std::array<std::string, 4>& text() const { return text_; }

private:
  MeasureParams() = default;

  std::array<std::string, 4> text_;
  std::array<Rational, 4> exact_{};
  Backend backend_ = Backend::exact_rational;
  bool natural_ = false;
  int working_digits_ = default_digits;
};

// Similarity dimension d with r1^d + r2^d = 1, at the current precision.
Real similarity_dimension(const Real& r1, const Real& r2);

struct MeasureClass {
  bool is_lebesgue = false;
  bool is_symmetric = false;
  bool has_renormalization = false;
  bool dirichlet_equals_neumann = false;
  // R = 1/(r1 m1), present iff has_renormalization.
  std::optional<Real> renorm_factor;
  std::optional<Rational> renorm_factor_exact;
};

MeasureClass classify(const MeasureParams& params);

}  // namespace mgl
