// Eigenfunctions sampled at the corner points S_w(0), S_w(1) of the
// attractor, and their L2(mu) and sup norms.
//
// With z = sqrt(lambda) the four solution families
//   c_lm(z, x) = sum (-1)^n z^{2n} p_{2n}(x),     s_lm(z, x) = sum (-1)^n z^{2n+1} q_{2n+1}(x),
//   c_ml(z, x) = sum (-1)^n z^{2n} q_{2n}(x),     s_ml(z, x) = sum (-1)^n z^{2n+1} p_{2n+1}(x)
// take the values 1, 0, 1, 0 at x = 0 and cosN, sinD, cosD, sinN at x = 1.
// Values at S1(x) are values at x of the same family at sqrt(r1 m1) z;
// values at S2(x) combine the families at sqrt(r2 m2) z with the
// trigonometric functions at sqrt(r1 m1) z. Descending over words gives all
// corner values from trigonometric values at the arguments
// sqrt(r1 m1)^j sqrt(r2 m2)^k z. Every value is a ball.
//
// The Neumann eigenfunction is c_lm(sqrt(lambda), .), the Dirichlet one
// s_lm(sqrt(lambda), .); ND uses c_lm and DN uses s_lm.
#pragma once

#include "mgl/spectrum.hpp"

#include <array>
#include <string>
#include <vector>

namespace mgl {

enum class Family { c_lm, s_lm, c_ml, s_ml };

std::string to_string(Family f);
Family parse_family(const std::string& text);
// Family that is the eigenfunction for the boundary condition.
Family eigen_family(BoundaryCondition bc);

inline constexpr int max_sample_depth = 20;

// All four families at the corner points of one depth, for a fixed z.
struct CornerValues {
  Real z;
  int depth = 0;
  std::vector<Real> xs;  // 2^(depth+1) points, nondecreasing, from 0 to 1
  std::array<std::vector<Ball>, 4> values;  // indexed by Family
};

// Corner values at z >= 0. Only the families flagged in `which` are filled
// (c_lm and s_lm are computed together, as are c_ml and s_ml).
CornerValues corner_values(const TrigEngine& engine, const Real& z, int depth,
                           std::array<bool, 4> which = {true, true, true, true});

struct EigenfunctionSample {
  EigenvalueRecord record;
  int depth = 0;
  Family family = Family::c_lm;
  std::vector<Real> xs;
  std::vector<Ball> values;
};

// The eigenfunction of `record` (or another family at the same z) at the
// corner points of the given depth. lambda = 0 gives the constant 1.
EigenfunctionSample sample(const EigenvalueRecord& record, const TrigEngine& engine, int depth,
                           Family family);
EigenfunctionSample sample(const EigenvalueRecord& record, const TrigEngine& engine, int depth);

struct NormEstimate {
  Real value;
  Real radius;
};

// max |values| over the corner points: a lower estimate of the sup norm
// that does not decrease with the depth.
NormEstimate sup_norm(const EigenfunctionSample& sample);

// ||f||_2 from the boundary terms of the Green identity,
//   N: cosN(z) sinN'(z) / 2,   D: sinD'(z) cosD(z) / 2,
//   ND: -cosN'(z) sinN(z) / 2,  DN: -sinD(z) cosD'(z) / 2,
// evaluated over the certified z enclosure of the record.
CertifiedValue l2_norm(const EigenvalueRecord& record, const TrigEngine& engine);

// ||f||_2 from the coefficient series
//   N: sum (-1)^n lambda^n sum_k (n+1-2k) p_{2k} p_{2n+1-2k}
//   D: sum (-1)^n lambda^(n+1) sum_k (n+1-2k) q_{2k+1} q_{2n+2-2k}
// with the factorial tail bound. The terms grow to about exp(2 c lambda)
// before cancelling, so the precision grows linearly with lambda; throws
// PrecisionExhausted when it would exceed max_digits.
CertifiedValue l2_norm_series(const EigenvalueRecord& record, const MeasureParams& params,
                              int digits, int max_digits = 400);

// ||f~||_inf = ||f||_inf / ||f||_2 for the L2-normalized eigenfunction.
NormEstimate normalized_sup(const NormEstimate& sup, const CertifiedValue& l2);

// Relations between f_m and f_2m for measures with r1 m1 = r2 m2:
//   ||f_2m||_2^2  = (m1 + m2 (m1/m2)^(2^(v(m)+1))) ||f_m||_2^2
//   ||f_2m||_inf = max{1, (m1/m2)^(2^v(m))} ||f_m||_inf
struct NormRecursion {
  Real l2_factor;        // factor between the squared L2 norms
  Real l2_residual;      // ||f_2m||^2 - factor ||f_m||^2
  Real l2_bound;         // propagated bound for the residual
  bool l2_pass = false;
  Real sup_factor;
  Real sup_residual;     // ||f_2m||_inf - factor ||f_m||_inf (estimates)
};
NormRecursion norm_recursion_check(const MeasureParams& params, int m, const CertifiedValue& l2_m,
                                   const CertifiedValue& l2_2m, const NormEstimate& sup_m,
                                   const NormEstimate& sup_2m);

// ||f~_{2^k l}||_inf / ||f~_l||_inf predicted for odd l when m1 <= m2:
//   m1^(-k/2) prod_{j=1..k} (1 + (m1/m2)^(2^j - 1))^(-1/2).
Real normalized_growth_factor(const MeasureParams& params, int k);

// Ball enclosing sqrt(lambda) for every lambda in the record's enclosure.
Ball z_enclosure(const EigenvalueRecord& record);

// Residual of a pointwise identity over the corner points. `residual` and
// `bound` belong to the point where |residual| - bound is largest, so the
// identity holds within bounds at every point iff pass.
struct PointwiseResidual {
  Real residual;
  Real bound;
  Real max_residual;  // largest |residual| over all points
  int points = 0;
  bool pass = false;
};

// max over corner points of |c_lm c_ml + s_lm s_ml - 1|. Holds for every z.
PointwiseResidual pythagorean_check(const TrigEngine& engine, const Real& z, int depth);

// Worst point of a list of residual balls.
PointwiseResidual worst_point(const std::vector<Ball>& residuals);

// f_N f_D' - f_D f_N' = sqrt(lambda) at the corner points, for measures whose
// Neumann and Dirichlet eigenvalues coincide; uses f_N' = -z s_ml and
// f_D' = z c_ml.
PointwiseResidual wronskian_check(const MeasureParams& params, const EigenvalueRecord& record,
                                  const TrigEngine& engine, int depth);

}  // namespace mgl
