// Coefficient sequences p_n = p_n(1) and q_n = q_n(1) of the generalized
// monomials, built level by level from the self-similar recursion, together
// with consistency checks that do not reuse that recursion.
#pragma once

#include "mgl/measure.hpp"

#include <array>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace mgl {

// A table entry or check result: exact when the table is exact, otherwise a
// real at the table precision.
struct Value {
  std::optional<Rational> exact;
  Real approx;

  static Value of(const Rational& q);
  static Value of(const Real& r);
  bool is_exact() const { return exact.has_value(); }
  Real real() const;  // at the current precision
  std::string str(int digits) const;
};

struct PQTable {
  MeasureParams params = MeasureParams::exact(Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2));
  Backend backend = Backend::exact_rational;
  int n_max = 0;
  std::vector<Rational> p_exact, q_exact;
  std::vector<Real> p_real, q_real;
  // Precision (decimal digits) of p_real/q_real.
  unsigned digits = 0;
  // Relative error bound of entry n, in units of the roundoff at `digits`.
  std::vector<double> err_units;

  bool is_exact() const { return backend == Backend::exact_rational; }
  // Entry n at the current default precision.
  Real p(int n) const;
  Real q(int n) const;
  Value p_value(int n) const;
  Value q_value(int n) const;
  // Relative error bound of entry n as a real at the current precision.
  Real rel_error(int n) const;
};

// Exact backend when the parameters are rational, otherwise the real backend
// at working_digits plus 20 guard digits.
PQTable compute_pq(const MeasureParams& params, int n_max);

// Real backend at the given precision regardless of the parameter type.
PQTable compute_pq_real(const MeasureParams& params, int n_max, unsigned digits);

// Optional table cache consulted by compute_pq and compute_pq_real. The
// loader receives the parameters, backend, n_max and (real backend) the
// precision; a table it returns is used as is. The saver receives every
// freshly computed table. Empty functions disable the cache.
struct TableCache {
  std::function<std::optional<PQTable>(const MeasureParams&, Backend, int, unsigned)> load;
  std::function<void(const PQTable&)> save;
};
void set_table_cache(TableCache cache);

// Converts an exact table to reals at the given precision (entries are
// correctly rounded, so the error bound is one unit).
PQTable to_real_table(const PQTable& table, unsigned digits);

// p_{2n} from the half-sum formula valid for symmetric measures.
Value symmetric_even_shortcut(const PQTable& table, int n);

// sum_{j=0}^{2n} (-1)^j q_j p_{2n-j}, which vanishes for n >= 1.
Value cross_identity_check(const PQTable& table, int n);

// Residuals (formula - table entry) of the four unsolved binomial-type
// identities at level n >= 1, in the order p_{2n}, q_{2n}, p_{2n+1}, q_{2n+1}.
std::array<Value, 4> binomial_analogue_check(const PQTable& table, int n);

// Brute-force p_n(1), q_n(1) from the level-L atomic approximation of mu
// (2^L atoms of mass m_w at S_w(1/2)) by alternating cumulative sums and
// trapezoidal Lebesgue steps.
std::pair<double, double> quadrature_oracle(const MeasureParams& params, int n, int level);

}  // namespace mgl
