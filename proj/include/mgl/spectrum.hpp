// Eigenvalues of the Krein-Feller operator -d/dmu d/dx on [0,1] under the
// Neumann (N), Dirichlet (D) and mixed (ND: Neumann at 0 and Dirichlet at 1,
// DN: the reverse) boundary conditions.
//
// With lambda = z^2 the eigenvalues are the positive zeros of
//   N: sinN(z)/z,  D: sinD(z)/z,  ND: cosN(z),  DN: cosD(z)
// (plus lambda = 0 for N). Zeros are isolated rigorously by interval
// evaluation of the trigonometric functions over whole z-intervals: an
// interval is discarded when the enclosure of the function excludes zero,
// and it holds exactly one zero when the enclosure of the derivative excludes
// zero and the endpoint signs differ. Isolated zeros are then refined by
// safeguarded Newton steps in lambda.
#pragma once

#include "mgl/trig.hpp"

#include <string>
#include <vector>

namespace mgl {

enum class BoundaryCondition { N, D, ND, DN };

std::string to_string(BoundaryCondition bc);
BoundaryCondition parse_boundary_condition(const std::string& text);

// The trigonometric function whose positive zeros are the eigenvalues.
TrigKind characteristic_kind(BoundaryCondition bc);

struct Provenance {
  enum class Kind { root_found, renormalized, synthetic };
  Kind kind = Kind::root_found;
  int source_index = 0;  // index of the eigenvalue that was rescaled
};

std::string to_string(const Provenance& p);

struct EigenvalueRecord {
  BoundaryCondition bc = BoundaryCondition::N;
  int index = 0;
  Real lambda;
  Real lo, hi;        // certified enclosure of the eigenvalue
  int digits = 0;     // correct significant digits guaranteed by [lo, hi]
  Provenance provenance;
  int degree_used = 0;  // series terms needed for a 1e-16 relative truncation
};

// Number of terms of the power series of F in lambda needed at lambda so
// that the omitted terms sum to less than 1e-16 |lambda F'(lambda)|.
int series_degree(const MeasureParams& params, BoundaryCondition bc, const Real& lambda,
                  const Real& derivative);

// The characteristic function F(lambda) (sinN(z)/z, sinD(z)/z, cosN(z) or
// cosD(z) with z = sqrt(lambda)) with a radius below tol.
CertifiedValue characteristic(BoundaryCondition bc, const TrigEngine& engine, const Real& lambda,
                              const Real& tol);

struct SpectrumOptions {
  // Upper limit for precision escalation when resolving clustered zeros.
  unsigned precision_ceiling = 600;
  // Initial scan step in z (intervals are subdivided adaptively).
  double scan_step = 0.5;
  // Compute even-indexed Neumann eigenvalues by rescaling lambda_m when the
  // measure admits renormalization, instead of root finding.
  bool use_renormalization = false;
};

// The first `count` eigenvalues (index 1..count; for N also index 0), each
// with at least `digits` correct significant digits.
std::vector<EigenvalueRecord> find_eigenvalues(BoundaryCondition bc, const MeasureParams& params,
                                               int count, int digits,
                                               const SpectrumOptions& options = {});

// All eigenvalues below lambda_max.
std::vector<EigenvalueRecord> find_eigenvalues_below(BoundaryCondition bc,
                                                     const MeasureParams& params,
                                                     double lambda_max, int digits,
                                                     const SpectrumOptions& options = {});

// lambda_{N,2m} = R lambda_{N,m} for renormalizable measures with
// R = 1/(r1 m1). Throws ValidationError when the measure has no
// renormalization.
EigenvalueRecord renormalize_up(const MeasureParams& params, const EigenvalueRecord& record);

// For symmetric measures (r, r, 1/2, 1/2): (2/r) lambda_{DN} is a Dirichlet
// eigenvalue. The residual is F_D at the lifted value.
struct LiftResult {
  Real lifted;
  Real residual;
  Real residual_bound;  // radius of the residual enclosure
  Real derivative;      // F_D' at the lifted value
  bool consistent = false;  // |residual| is within the value uncertainty
};
LiftResult dn_lift_symmetric(const MeasureParams& params, const Real& lambda_dn, int digits);

// Largest k with 2^k dividing m (m >= 1).
int two_adic_valuation(long long m);

struct InterlacingEntry {
  BoundaryCondition bc;
  int index;
  Real lambda;
};

struct InterlacingReport {
  std::vector<InterlacingEntry> merged;  // ascending, lambda_{N,0} excluded
  bool pattern_holds = false;            // N D D N N D D N N ... everywhere
  int ties = 0;                          // N and D enclosures that coincide
  int first_violation = -1;              // position in merged, -1 if none
  std::string verdict;
};

// Checks lambda_{N,0} < lambda_{N,1} < lambda_{D,1} < lambda_{D,2} <
// lambda_{N,2} < lambda_{N,3} < ... on the common range of the two lists.
// Overlapping certified enclosures count as ties; with strict set they raise
// OverlapUnresolvable instead.
InterlacingReport interlacing_report(const std::vector<EigenvalueRecord>& neumann,
                                     const std::vector<EigenvalueRecord>& dirichlet,
                                     bool strict = false);

}  // namespace mgl
