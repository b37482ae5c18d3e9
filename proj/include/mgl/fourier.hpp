// Fourier coefficients of a few test functions in the Neumann and Dirichlet
// eigenbases of a symmetric measure, Parseval sums and partial-sum
// reconstruction.
//
// With f_k the eigenfunction at z_k = sqrt(lambda_k) and n_k = ||f_k||_2,
// the coefficients a_k = (1/n_k) int f f_k dmu follow from integrating by
// parts twice, which leaves boundary values only:
//   x in the N basis:   a_0 = q_2,  a_k = (cosN(z_k) - 1) / (n_k lambda_k)
//   1 in the N basis:   a_0 = 1,    a_k = 0
//   f_{D,j} in the N basis (w = z_{D,j}):
//                       a_0 = (1 - cosD(w)) / w,
//                       a_k = w (1 - cosN(z_k) cosD(w)) / ((lambda_{D,j} - lambda_k) n_k)
//   x in the D basis:   a_k = -cosD(z_k) / (n_k z_k)
//   1 in the D basis:   a_k = (1 - cosD(z_k)) / (n_k z_k)
//   f_{D,j} in the D basis: a_j = n_j, all others 0.
// The trigonometric values are evaluated over the eigenvalue enclosures, so
// every coefficient is a ball. For symmetric measures cosN(z_{N,k}) and
// cosD(z_{D,k}) are +-1; the expected sign (-1)^k is checked term by term.
#pragma once

#include "mgl/eigenfunction.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mgl {

enum class FourierTargetKind { identity_x, constant_one, dirichlet_eigenfunction };

struct FourierTarget {
  FourierTargetKind kind = FourierTargetKind::identity_x;
  int index = 0;  // Dirichlet index j for dirichlet_eigenfunction
};

// "x", "1" and "fD<j>" (for example "fD1").
std::string to_string(const FourierTarget& target);
FourierTarget parse_fourier_target(const std::string& text);

struct FourierTerm {
  EigenvalueRecord record;
  CertifiedValue norm;   // n_k
  Ball boundary_cos;     // cosN(z_k) in the N basis, cosD(z_k) in the D basis
  bool sign_rule = false;  // boundary_cos contains (-1)^k
  Ball coefficient;      // a_k
  bool vanishes = false;   // a_k is exactly 0 or its ball contains 0
};

struct FourierExpansion {
  MeasureParams params = MeasureParams::exact(Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2));
  BoundaryCondition basis = BoundaryCondition::N;
  FourierTarget target;
  int digits = 0;
  std::vector<FourierTerm> terms;  // ascending index from 0 (N) or 1 (D)
  // For the eigenfunction target: its record and norm.
  std::optional<EigenvalueRecord> target_record;
  CertifiedValue target_norm;
  // First term index where cosN or cosD at the eigenvalue is not (-1)^k,
  // -1 when the rule holds for every term and for the target eigenfunction.
  int sign_rule_violation = -1;

  int count() const { return static_cast<int>(terms.size()); }
};

// The first `count` coefficients (k = 0..count-1 in the N basis,
// k = 1..count in the D basis). Eigenvalues are certified to `digits`.
// Throws ValidationError for asymmetric measures or an unsupported basis.
FourierExpansion expand(const FourierTarget& target, BoundaryCondition basis,
                        const MeasureParams& params, int count, int digits = 20);
// All coefficients whose eigenvalue lies below lambda_max.
FourierExpansion expand_below(const FourierTarget& target, BoundaryCondition basis,
                              const MeasureParams& params, double lambda_max, int digits = 20);

// Parseval identity of an expansion in the closed form
//   x, N:       sum_{k>=1} 1/(n_k^2 lambda_k^2)              = (p_2 q_2 - q_3)/4
//   x, D:       sum_{k>=1} 1/(n_k^2 lambda_k)                = q_2 - q_3
//   1, D:       sum_{k odd} 1/(n_k^2 lambda_k)               = 1/4
//   f_{D,j}, N: sum_{k>=1} 1/((lambda_k - lambda_D)^2 n_k^2) = n_D^2/(4 lambda_D) - 1/lambda_D^2
// (j odd), where the partial sum is computed from the coefficients.
struct ParsevalSum {
  std::string identity;
  int terms = 0;             // coefficients included
  Real partial;
  Real partial_radius;       // propagated error of the partial sum
  Real target;
  Real target_radius;
  Real gap;                  // target - partial
  bool nondecreasing = true; // every summand is nonnegative
  bool within_target = true; // partial <= target within the error radii
};
ParsevalSum parseval(const FourierExpansion& expansion);

// The four Parseval identities on all eigenvalues below lambda_max; the
// eigenfunction identity uses f_{D,eigen_index}.
std::vector<ParsevalSum> parseval_sums(const MeasureParams& params, double lambda_max,
                                       int digits = 20, int eigen_index = 1);

struct Reconstruction {
  int depth = 0;
  std::vector<int> indices;   // basis indices of the terms used
  std::vector<Real> xs;
  std::vector<Real> target;   // f at xs
  std::vector<Real> partial;  // sum of a_k f_k(x)/n_k over the terms used
};

// Partial sum of the first `terms` coefficients that do not vanish, at the
// corner points of the given depth. terms = 0 gives the zero function.
Reconstruction reconstruct(const FourierExpansion& expansion, int depth, int terms);

// a_k by discrete mu-quadrature of f f_k / n_k over the cells of the given
// depth (the mean of the two corner values times the cell mass): an oracle
// independent of the closed forms. `position` indexes expansion.terms.
Real quadrature_coefficient(const FourierExpansion& expansion, int position, int depth);

}  // namespace mgl
