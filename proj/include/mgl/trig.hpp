// The four generalized trigonometric functions
//   sinN(z) = sum (-1)^n p_{2n+1} z^{2n+1},  sinD(z) = sum (-1)^n q_{2n+1} z^{2n+1},
//   cosN(z) = sum (-1)^n p_{2n} z^{2n},      cosD(z) = sum (-1)^n q_{2n} z^{2n},
// and the generalized exponential, evaluated at real arguments with
// rigorous error bounds.
//
// Two independent routes are provided:
//  * eval / DirectTrig: the truncated power series with the factorial tail
//    bound p_{2n+1} <= q_2^n/n! (and its three companions);
//  * TrigEngine: the same series near the origin, extended to large |z| by
//    the functional equations that express each function at z through the
//    four functions at sqrt(r1 m1) z and sqrt(r2 m2) z. All quantities are
//    balls, so the result carries a propagated error radius.
#pragma once

#include "mgl/pq_engine.hpp"

#include <map>
#include <memory>
#include <utility>

namespace mgl {

enum class TrigKind { sinN, sinD, cosN, cosD };

std::string to_string(TrigKind k);

struct TrigSeries {
  TrigKind kind;
  const PQTable* table;
  int degree;  // number of retained terms
};

struct CertifiedValue {
  Real value;
  Real tail_bound;  // bound on truncation plus rounding error
};

// Smallest number of retained terms whose factorial tail bound at |z| is
// below tol/2, or -1 if it is not reached below max_terms.
int lemma_degree(const PQTable& table, TrigKind kind, const Real& z, const Real& tol,
                 int max_terms = 1 << 20);

// Truncated series at the series degree. Throws TableTooShallow when the
// tail bound exceeds tol or the table is too short for the degree.
CertifiedValue eval(const TrigSeries& series, const Real& z, const Real& tol);

// The generalized exponential on the real line:
//   lambda-mu: sum z^{2n} p_{2n} + sum z^{2n+1} q_{2n+1}
//   mu-lambda: sum z^{2n} q_{2n} + sum z^{2n+1} p_{2n+1}
enum class ExpVariant { lambda_mu, mu_lambda };
CertifiedValue eval_exp(const PQTable& table, const Real& z, ExpVariant variant, const Real& tol);
// Real and imaginary part of the exponential at the imaginary argument i t,
// summed from the exponential's own coefficient sequence.
std::pair<CertifiedValue, CertifiedValue> eval_exp_imaginary(const PQTable& table, const Real& t,
                                                             ExpVariant variant, const Real& tol);

// Direct series on a table deep enough for |z| <= z_max at the given
// precision.
class DirectTrig {
public:
  DirectTrig(const MeasureParams& params, const Real& z_max, unsigned digits);
  CertifiedValue eval(TrigKind kind, const Real& z) const;
  const PQTable& table() const { return table_; }
  const Real& tol() const { return tol_; }

private:
  PQTable table_;
  Real tol_;
};

struct TrigQuad {
  Jet sinN, sinD, cosN, cosD;
  const Jet& get(TrigKind k) const;
};

// Certified evaluator for arbitrary real z based on the functional equations.
class TrigEngine {
public:
  TrigEngine(const MeasureParams& params, unsigned digits);

  // All four functions with derivatives, as balls at the engine precision
  // (the caller must hold a PrecisionScope of at least working_digits()).
  TrigQuad eval_all(const Real& z) const;
  // Enclosures valid for every argument in the ball (interval evaluation).
  // The ball must lie in z >= 0.
  TrigQuad eval_ball(const Ball& z) const;
  // One function with a radius below tol; raises the precision when needed.
  CertifiedValue eval(TrigKind kind, const Real& z, const Real& tol) const;

  unsigned digits() const { return digits_; }
  unsigned working_digits() const { return work_; }
  const MeasureParams& params() const { return params_; }
  // Base-case coefficient table (real backend at the working precision).
  const PQTable& table() const;
  // A copy of this engine at a higher precision.
  TrigEngine with_digits(unsigned digits) const;

private:
  struct Constants;
  TrigQuad base(const Ball& s) const;
  TrigQuad descend(const Ball& z, int i, int j, std::map<std::pair<int, int>, TrigQuad>& memo) const;
  void ensure_terms(int terms) const;

  MeasureParams params_;
  unsigned digits_;
  unsigned work_;
  bool equal_scales_;
  std::shared_ptr<Constants> k_;
  mutable std::shared_ptr<PQTable> table_;
  mutable std::vector<double> coef_abs_[4];
  mutable std::vector<Real> coef_[4];       // series coefficients at the working precision
  mutable std::vector<Real> max_rel_err_;   // prefix maxima of the table error bounds
};

// Residuals lhs - rhs of the four functional equations at z, every one of
// the twelve evaluations done by the direct series.
struct FunctionalResiduals {
  std::array<Real, 4> residual;  // sinN, sinD, cosN, cosD equations
  std::array<Real, 4> bound;
};
FunctionalResiduals functional_equation_residuals(const DirectTrig& direct, const Real& z);

}  // namespace mgl
