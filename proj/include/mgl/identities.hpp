// Verification suites for the identities satisfied by the coefficient
// sequences and the trigonometric functions. Every entry compares a residual
// with the bound propagated through the computation (ball radii, table error
// bounds and series tails); coefficient identities on an exact table are
// checked for exact equality.
#pragma once

#include "mgl/eigenfunction.hpp"

#include <string>
#include <vector>

namespace mgl {

struct CheckEntry {
  std::string name;
  std::string inputs;
  Real residual;
  Real bound;
  bool exact = false;  // exact rational comparison (bound 0)
  bool pass = false;   // |residual| <= bound
};

struct VerificationReport {
  std::string suite;
  std::string params;
  int working_digits = 0;
  std::vector<CheckEntry> entries;

  bool pass() const;
  int failures() const;
  // Appends an entry whose residual is the ball `r` (pass iff r contains 0).
  void add(const std::string& name, const std::string& inputs, const Ball& r);
  void add_exact(const std::string& name, const std::string& inputs, const Rational& r);
};

// h(z) = r1 cosN(z) + r2 cosD(z) - (1 - r1 - r2) z sinN(z).
CertifiedValue h_value(const TrigEngine& engine, const Real& z);

// n points spaced logarithmically in [z_max / 1000, z_max].
std::vector<Real> log_grid(const Real& z_max, int n);

// cosD cosN + sinD sinN = 1 on the z grid, and c_lm c_ml + s_lm s_ml = 1 at
// the corner points of the given depth for a few z.
VerificationReport pythagorean_suite(const TrigEngine& engine, const std::vector<Real>& zs,
                                     int depth);

// The four functional equations, every term from the direct series.
VerificationReport functional_equation_suite(const MeasureParams& params,
                                             const std::vector<Real>& zs, int digits);

// sinN, cosN, sinD and cosD at z through h at sqrt(r1 m1) z (measures with
// r1 m1 = r2 m2).
VerificationReport rearranged_equation_suite(const TrigEngine& engine, const std::vector<Real>& zs);

// At z_m = sqrt(lambda_{N,m}): cosN = (-r2/r1)^(2^v), cosD = (-r1/r2)^(2^v),
// sinD = a_v z_m, h(z_m) = r1 (-r2/r1)^(2^v) + r2 (-r1/r2)^(2^v), and
// h(sqrt(r1 m1) z_m) = 0 for odd m. Appends to `report`.
void eigen_zero_values(const MeasureParams& params, const TrigEngine& engine,
                       const EigenvalueRecord& record, VerificationReport& report);
VerificationReport eigen_zero_suite(const MeasureParams& params, const TrigEngine& engine,
                                    const std::vector<EigenvalueRecord>& neumann);

// Symmetric measures: sum p_{2k} p_{2n-2k+1} = sum p_{2k+1} q_{2n-2k},
// p_{2n} = q_{2n} and the half-sum recursion on the table; cosN = cosD and
// cosN^2 + sinN sinD = 1 on the z grid; the reflection formulas
// c_lm(z, 1-x) = cosN c_lm(z, x) + sinN s_lm(z, x) and
// s_lm(z, 1-x) = sinD c_lm(z, x) - cosD s_lm(z, x) at the corner points.
VerificationReport symmetric_suite(const PQTable& table, const TrigEngine& engine,
                                   const std::vector<Real>& zs, int depth);

// Measures with r1 = m2, r2 = m1: p_{2n+1} = q_{2n+1} on the table, and the
// Wronskian f_N f_D' - f_D f_N' = sqrt(lambda) at the corner points.
VerificationReport coincidence_suite(const PQTable& table, const TrigEngine& engine,
                                     const std::vector<EigenvalueRecord>& neumann, int depth);

// sum_j (-1)^j q_j p_{2n-j} = 0 for n >= 1, and the four binomial-type
// recursions, on the table.
VerificationReport coefficient_suite(const PQTable& table);

struct SuiteOptions {
  int digits = 50;          // working digits of the engines
  int n_max = 30;           // coefficient table length
  double z_max = 100;       // grid for the engine-based suites
  double fe_z_max = 8;      // grid for the direct-series functional equations
  int grid_points = 32;
  int depth = 6;            // corner-point depth
  int eigen_count = 8;      // Neumann eigenvalues for the eigenvalue suites
};

// Suite names: coefficients, pythagorean, functional, rearranged,
// eigen_zero, symmetric, coincidence.
const std::vector<std::string>& suite_names();
bool suite_applies(const std::string& suite, const MeasureParams& params);

// Runs the selected suites ("all" runs every applicable one; a named suite
// that does not apply raises ValidationError).
std::vector<VerificationReport> run_suites(const std::vector<std::string>& selection,
                                           const MeasureParams& params,
                                           const SuiteOptions& options = {});

// Human-readable table.
std::string render_table(const VerificationReport& report);

}  // namespace mgl
