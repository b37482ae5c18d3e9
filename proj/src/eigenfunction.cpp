#include "mgl/eigenfunction.hpp"

#include "mgl/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace mgl {

std::string to_string(Family f) {
  switch (f) {
    case Family::c_lm: return "c_lm";
    case Family::s_lm: return "s_lm";
    case Family::c_ml: return "c_ml";
    case Family::s_ml: return "s_ml";
  }
  return "?";
}

Family parse_family(const std::string& text) {
  if (text == "c_lm") return Family::c_lm;
  if (text == "s_lm") return Family::s_lm;
  if (text == "c_ml") return Family::c_ml;
  if (text == "s_ml") return Family::s_ml;
  throw ValidationError("unknown family '" + text + "' (expected c_lm, s_lm, c_ml or s_ml)");
}

Family eigen_family(BoundaryCondition bc) {
  return bc == BoundaryCondition::N || bc == BoundaryCondition::ND ? Family::c_lm : Family::s_lm;
}

namespace {

constexpr int C = static_cast<int>(Family::c_lm);
constexpr int S = static_cast<int>(Family::s_lm);
constexpr int K = static_cast<int>(Family::c_ml);
constexpr int T = static_cast<int>(Family::s_ml);

struct Scalars {
  Ball a1, a2;
  Ball L1, L2;    // sqrt(r_i / m_i)
  Ball K1, K2;    // sqrt(m_i / r_i)
  Ball K12;       // sqrt(m1 m2 / (r1 r2))
  Ball C1, C2;    // sqrt(r2 m1 / (r1 m2)), sqrt(r1 m2 / (r2 m1))
  Ball G;         // 1 - (r1 + r2)
  Ball G1, G2;    // G sqrt(m1 / r1), G sqrt(m2 / r2)
  bool equal_scales = false;
};

// At the current precision.
Scalars scalars(const MeasureParams& params) {
  const RealParams v = params.real();
  const Real u = unit_roundoff() * (params.natural_weights() ? 64 : 4);
  auto ball = [&u](const Real& x) { return Ball(x, abs(x) * u); };
  Scalars k;
  k.a1 = ball(sqrt(v.r1 * v.m1));
  k.a2 = ball(sqrt(v.r2 * v.m2));
  k.L1 = ball(sqrt(v.r1 / v.m1));
  k.L2 = ball(sqrt(v.r2 / v.m2));
  k.K1 = ball(sqrt(v.m1 / v.r1));
  k.K2 = ball(sqrt(v.m2 / v.r2));
  k.K12 = ball(sqrt(v.m1 * v.m2 / (v.r1 * v.r2)));
  k.C1 = ball(sqrt(v.r2 * v.m1 / (v.r1 * v.m2)));
  k.C2 = ball(sqrt(v.r1 * v.m2 / (v.r2 * v.m1)));
  Real g = 1 - v.r1 - v.r2;
  if (params.is_exact()) {
    const auto& q = params.rationals();
    g = to_real(1 - q[0] - q[1]);
  }
  k.G = Ball(g, abs(g) * u + (v.r1 + v.r2) * u);
  k.G1 = k.G * k.K1;
  k.G2 = k.G * k.K2;
  k.equal_scales = k.a1.mid == k.a2.mid;
  return k;
}

using Node = std::array<std::vector<Ball>, 4>;
using Key = std::pair<int, int>;

// Bottom-up descent: level d holds the corner values at depth d of the
// functions at argument a1^j a2^k z for every (j, k) with j + k <= depth - d.
class Descent {
public:
  Descent(const TrigEngine& engine, const Real& z, std::array<bool, 4> which)
      : engine_(engine), k_(scalars(engine.params())), z_(z) {
    lm_ = which[C] || which[S];
    ml_ = which[K] || which[T];
  }

  CornerValues run(int depth) {
    std::map<Key, Node> level;
    std::vector<Real> xs{Real(0), Real(1)};
    for (const Key& key : keys(depth)) level.emplace(key, base(key));
    const RealParams v = engine_.params().real();
    for (int d = 1; d <= depth; ++d) {
      std::map<Key, Node> next;
      for (const Key& key : keys(depth - d)) next.emplace(key, combine(key, level));
      level = std::move(next);
      std::vector<Real> grid;
      grid.reserve(xs.size() * 2);
      for (const Real& x : xs) grid.push_back(v.r1 * x);
      for (const Real& x : xs) grid.push_back(v.r2 * x + (1 - v.r2));
      grid.front() = 0;
      grid.back() = 1;
      xs = std::move(grid);
    }
    CornerValues out;
    out.z = z_;
    out.depth = depth;
    out.xs = std::move(xs);
    out.values = std::move(level.begin()->second);
    return out;
  }

private:
  Key normalize(int j, int k) const { return k_.equal_scales ? Key{j + k, 0} : Key{j, k}; }

  std::vector<Key> keys(int total) const {
    std::vector<Key> out;
    for (int j = 0; j <= total; ++j) {
      if (k_.equal_scales) {
        out.push_back({j, 0});
      } else {
        for (int k = 0; j + k <= total; ++k) out.push_back({j, k});
      }
    }
    return out;
  }

  const Ball& arg(const Key& key) {
    auto it = args_.find(key);
    if (it != args_.end()) return it->second;
    Ball w;
    if (key.first == 0 && key.second == 0) {
      w = Ball(z_);
    } else if (key.first > 0) {
      w = arg(normalize(key.first - 1, key.second)) * k_.a1;
    } else {
      w = arg(normalize(key.first, key.second - 1)) * k_.a2;
    }
    return args_.emplace(key, w).first->second;
  }

  const TrigQuad& quad(const Key& key) {
    auto it = quads_.find(key);
    if (it != quads_.end()) return it->second;
    const Ball& w = arg(key);
    TrigQuad q = w.rad.is_zero() ? engine_.eval_all(w.mid) : engine_.eval_ball(w);
    return quads_.emplace(key, std::move(q)).first->second;
  }

  Node base(const Key& key) {
    const TrigQuad& q = quad(key);
    Node n;
    if (lm_) {
      n[C] = {Ball(Real(1)), q.cosN.v};
      n[S] = {Ball(Real(0)), q.sinD.v};
    }
    if (ml_) {
      n[K] = {Ball(Real(1)), q.cosD.v};
      n[T] = {Ball(Real(0)), q.sinN.v};
    }
    return n;
  }

  Node combine(const Key& key, const std::map<Key, Node>& below) {
    const Node& left = below.at(normalize(key.first + 1, key.second));
    const Node& right = below.at(normalize(key.first, key.second + 1));
    const TrigQuad& q = quad(normalize(key.first + 1, key.second));
    const Ball& w = arg(key);
    const Ball& sN = q.sinN.v;
    const Ball& sD = q.sinD.v;
    const Ball& cN = q.cosN.v;
    const Ball& cD = q.cosD.v;
    const std::size_t n = lm_ ? left[C].size() : left[K].size();
    Node out;
    if (lm_) {
      const Ball alpha = cN - k_.G1 * w * sN;
      const Ball beta = k_.C1 * sN;
      const Ball gamma = k_.L1 * sD + k_.G * w * cD;
      const Ball delta = k_.L2 * cD;
      out[C].reserve(2 * n);
      out[S].reserve(2 * n);
      for (std::size_t i = 0; i < n; ++i) {
        out[C].push_back(left[C][i]);
        out[S].push_back(k_.L1 * left[S][i]);
      }
      for (std::size_t i = 0; i < n; ++i) {
        out[C].push_back(alpha * right[C][i] - beta * right[S][i]);
        out[S].push_back(gamma * right[C][i] + delta * right[S][i]);
      }
    }
    if (ml_) {
      const Ball eps = k_.K1 * sN;
      const Ball zeta = k_.K2 * cN - k_.G * k_.K12 * w * sN;
      const Ball eta = cD;
      const Ball theta = k_.C2 * sD + k_.G2 * w * cD;
      out[K].reserve(2 * n);
      out[T].reserve(2 * n);
      for (std::size_t i = 0; i < n; ++i) {
        out[K].push_back(left[K][i]);
        out[T].push_back(k_.K1 * left[T][i]);
      }
      for (std::size_t i = 0; i < n; ++i) {
        out[K].push_back(eta * right[K][i] - theta * right[T][i]);
        out[T].push_back(eps * right[K][i] + zeta * right[T][i]);
      }
    }
    return out;
  }

  const TrigEngine& engine_;
  Scalars k_;
  Real z_;
  bool lm_ = true;
  bool ml_ = true;
  std::map<Key, Ball> args_;
  std::map<Key, TrigQuad> quads_;
};

CertifiedValue sqrt_certified(const Ball& sq) {
  if (sq.mid - sq.radius() <= 0) throw ComputationError("L2 norm enclosure is not positive");
  const Real v = sqrt(sq.mid);
  CertifiedValue out;
  out.value = v;
  out.tail_bound = sq.radius() / (v + sqrt(sq.mid - sq.radius())) + v * unit_roundoff() * 2;
  return out;
}

}  // namespace

Ball z_enclosure(const EigenvalueRecord& r) {
  const Real lo = sqrt(to_current(r.lo) < 0 ? Real(0) : to_current(r.lo));
  const Real hi = sqrt(to_current(r.hi));
  const Real mid = (lo + hi) / 2;
  return Ball(mid, (hi - lo) / 2 + abs(hi) * unit_roundoff() * 4);
}

namespace {

// a / r > b / s with 0 / 0 = 0 and x / 0 = infinity for x > 0.
bool ratio_above(const Real& a, const Real& r, const Real& b, const Real& s) {
  if (r == 0) return a > 0 && !(s == 0 && b > 0);
  if (s == 0) return b == 0 && a > 0;
  return a * s > b * r;
}

}  // namespace

PointwiseResidual worst_point(const std::vector<Ball>& residuals) {
  // The worst point maximizes |residual| / bound (an exact zero counts as 0,
  // a nonzero residual with zero bound as infinite).
  PointwiseResidual out;
  out.residual = 0;
  out.bound = 0;
  out.max_residual = 0;
  for (const Ball& r : residuals) {
    const Real a = abs(r.mid);
    const Real rad = r.radius();
    if (ratio_above(a, rad, out.residual, out.bound)) {
      out.residual = a;
      out.bound = rad;
    }
    if (a > out.max_residual) out.max_residual = a;
  }
  out.points = static_cast<int>(residuals.size());
  out.pass = out.residual <= out.bound;
  return out;
}

CornerValues corner_values(const TrigEngine& engine, const Real& z, int depth,
                           std::array<bool, 4> which) {
  if (depth < 0) throw ValidationError("depth must be non-negative");
  if (depth > max_sample_depth)
    throw ValidationError("depth " + std::to_string(depth) + " exceeds the limit of " +
                          std::to_string(max_sample_depth));
  PrecisionScope scope(engine.working_digits());
  const Real zz = to_current(z);
  if (zz < 0) throw ValidationError("corner values need z >= 0");
  return Descent(engine, zz, which).run(depth);
}

EigenfunctionSample sample(const EigenvalueRecord& record, const TrigEngine& engine, int depth,
                           Family family) {
  PrecisionScope scope(engine.working_digits());
  std::array<bool, 4> which{};
  which[static_cast<int>(family)] = true;
  const Real lambda = to_current(record.lambda);
  CornerValues cv = corner_values(engine, lambda > 0 ? sqrt(lambda) : Real(0), depth, which);
  EigenfunctionSample out;
  out.record = record;
  out.depth = depth;
  out.family = family;
  out.xs = std::move(cv.xs);
  out.values = std::move(cv.values[static_cast<int>(family)]);
  return out;
}

EigenfunctionSample sample(const EigenvalueRecord& record, const TrigEngine& engine, int depth) {
  return sample(record, engine, depth, eigen_family(record.bc));
}

NormEstimate sup_norm(const EigenfunctionSample& s) {
  NormEstimate out;
  out.value = 0;
  out.radius = 0;
  for (const Ball& b : s.values) {
    const Real a = abs(b.mid);
    if (a > out.value) {
      out.value = a;
      out.radius = b.radius();
    }
  }
  return out;
}

CertifiedValue l2_norm(const EigenvalueRecord& record, const TrigEngine& engine) {
  PrecisionScope scope(engine.working_digits());
  if (record.lambda == 0) {
    CertifiedValue one;
    one.value = 1;
    one.tail_bound = 0;
    return one;
  }
  const Ball z = z_enclosure(record);
  const TrigQuad q = engine.eval_ball(z);
  const Ball half(Real(1) / 2);
  Ball sq;
  switch (record.bc) {
    case BoundaryCondition::N: sq = half * q.cosN.v * q.sinN.d; break;
    case BoundaryCondition::D: sq = half * q.sinD.d * q.cosD.v; break;
    case BoundaryCondition::ND: sq = -(half * q.cosN.d * q.sinN.v); break;
    case BoundaryCondition::DN: sq = -(half * q.sinD.v * q.cosD.d); break;
  }
  return sqrt_certified(sq);
}

CertifiedValue l2_norm_series(const EigenvalueRecord& record, const MeasureParams& params,
                              int digits, int max_digits) {
  if (record.lambda == 0) {
    CertifiedValue one;
    one.value = 1;
    one.tail_bound = 0;
    return one;
  }
  const bool neumann_family = eigen_family(record.bc) == Family::c_lm;
  if (record.bc == BoundaryCondition::ND || record.bc == BoundaryCondition::DN)
    throw ValidationError("the coefficient series covers the N and D eigenfunctions only");

  // Precision: the largest term is below exp(2 c lambda), c = max(p_2, q_2).
  double c = 0;
  double lambda = 0;
  {
    PrecisionScope low(30);
    const PQTable small = compute_pq_real(params, 4, 30);
    c = static_cast<double>(std::max(small.p(2), small.q(2)));
    lambda = static_cast<double>(to_current(record.lambda));
  }
  const double x = 2 * c * lambda;
  const int prec = digits + 15 + static_cast<int>(std::ceil(x / std::log(10.0)));
  if (prec > max_digits)
    throw PrecisionExhausted("the L2 series at lambda = " + std::to_string(lambda) + " needs " +
                             std::to_string(prec) + " digits");

  // Terms are bounded by (n+1) x^n / n! (N) and (n+1) x^(n+1) / (n+1)! (D);
  // once the ratio of consecutive bounds is below 1/2 the rest of the series
  // is below twice the current bound.
  auto log_bound = [&](int n) {
    const int e = neumann_family ? n : n + 1;
    return std::log(n + 1.0) + e * std::log(x) - std::lgamma(e + 1.0);
  };
  const double log_tol = -(digits + 5) * std::log(10.0);
  int N = 1;
  while (true) {
    const int e = neumann_family ? N : N + 1;
    const double ratio = (N + 2.0) / (N + 1.0) * x / (e + 1.0);
    if (ratio <= 0.5 && std::log(2.0) + log_bound(N) < log_tol) break;
    ++N;
  }

  const PQTable table = compute_pq_real(params, 2 * N + 4, static_cast<unsigned>(prec));
  PrecisionScope scope(static_cast<unsigned>(prec));
  const Real lam = to_current(record.lambda);
  Real sum = 0;
  Real abs_sum = 0;
  Real power = neumann_family ? Real(1) : lam;
  Real max_rel = 0;
  for (int n = 0; n < N; ++n) {
    Real inner = 0;
    Real inner_abs = 0;
    if (neumann_family) {
      for (int k = 0; k <= n; ++k) {
        const Real t = (n + 1 - 2 * k) * table.p(2 * k) * table.p(2 * n + 1 - 2 * k);
        inner += t;
        inner_abs += abs(t);
      }
    } else {
      for (int k = 0; k <= n + 1; ++k) {
        const Real t = (n + 1 - 2 * k) * table.q(2 * k + 1) * table.q(2 * n + 2 - 2 * k);
        inner += t;
        inner_abs += abs(t);
      }
    }
    sum += (n % 2 == 0 ? 1 : -1) * power * inner;
    abs_sum += power * inner_abs;
    power *= lam;
  }
  for (int n = 0; n <= 2 * N + 3; ++n) max_rel = std::max(max_rel, table.rel_error(n));
  Ball sq(sum, 2 * exp(Real(log_bound(N))) +
                   abs_sum * (2 * max_rel + (4 * N + 16) * unit_roundoff()));
  // The record's lambda is an approximation of the eigenvalue: the series is
  // differentiable in lambda, so widen by the derivative bound times the
  // enclosure width.
  Real dsum = 0;
  {
    Real pw = 1;
    for (int n = 1; n < N; ++n) {
      Real inner_abs = 0;
      if (neumann_family) {
        for (int k = 0; k <= n; ++k)
          inner_abs += abs((n + 1 - 2 * k) * table.p(2 * k) * table.p(2 * n + 1 - 2 * k));
        dsum += n * pw * inner_abs;
      } else {
        for (int k = 0; k <= n + 1; ++k)
          inner_abs += abs((n + 1 - 2 * k) * table.q(2 * k + 1) * table.q(2 * n + 2 - 2 * k));
        dsum += (n + 1) * pw * lam * inner_abs;
      }
      pw *= lam;
    }
  }
  const Real width = std::max<Real>(abs(to_current(record.hi) - lam), abs(lam - to_current(record.lo)));
  sq.widen(dsum * width);
  return sqrt_certified(sq);
}

NormEstimate normalized_sup(const NormEstimate& sup, const CertifiedValue& l2) {
  NormEstimate out;
  out.value = sup.value / l2.value;
  out.radius = sup.radius / l2.value +
               out.value * l2.tail_bound / (l2.value - l2.tail_bound);
  return out;
}

NormRecursion norm_recursion_check(const MeasureParams& params, int m, const CertifiedValue& l2_m,
                                   const CertifiedValue& l2_2m, const NormEstimate& sup_m,
                                   const NormEstimate& sup_2m) {
  if (!classify(params).has_renormalization)
    throw ValidationError("the norm recursion needs r1 m1 = r2 m2");
  if (m < 1) throw ValidationError("the norm recursion needs m >= 1");
  const RealParams v = params.real();
  const Real ratio = v.m1 / v.m2;
  const int e = two_adic_valuation(m);
  const Real pw = pow(ratio, Real(1LL << e));
  NormRecursion out;
  out.l2_factor = v.m1 + v.m2 * pw * pw;
  const Real a = l2_m.value * l2_m.value;
  const Real b = l2_2m.value * l2_2m.value;
  out.l2_residual = b - out.l2_factor * a;
  const Real da = l2_m.tail_bound * (2 * l2_m.value + l2_m.tail_bound);
  const Real db = l2_2m.tail_bound * (2 * l2_2m.value + l2_2m.tail_bound);
  out.l2_bound = db + out.l2_factor * da + (b + out.l2_factor * a) * unit_roundoff() * 16;
  out.l2_pass = abs(out.l2_residual) <= out.l2_bound;
  out.sup_factor = std::max<Real>(Real(1), pw);
  out.sup_residual = sup_2m.value - out.sup_factor * sup_m.value;
  return out;
}

Real normalized_growth_factor(const MeasureParams& params, int k) {
  const RealParams v = params.real();
  const Real ratio = v.m1 / v.m2;
  Real f = pow(v.m1, Real(-k) / 2);
  for (int j = 1; j <= k; ++j) f /= sqrt(1 + pow(ratio, Real((1LL << j) - 1)));
  return f;
}

PointwiseResidual pythagorean_check(const TrigEngine& engine, const Real& z, int depth) {
  PrecisionScope scope(engine.working_digits());
  const CornerValues cv = corner_values(engine, abs(to_current(z)), depth);
  const Ball one(Real(1));
  std::vector<Ball> r;
  r.reserve(cv.xs.size());
  for (std::size_t i = 0; i < cv.xs.size(); ++i)
    r.push_back(cv.values[C][i] * cv.values[K][i] + cv.values[S][i] * cv.values[T][i] - one);
  return worst_point(r);
}

PointwiseResidual wronskian_check(const MeasureParams& params, const EigenvalueRecord& record,
                                  const TrigEngine& engine, int depth) {
  if (!classify(params).dirichlet_equals_neumann)
    throw ValidationError("the Wronskian identity needs coinciding Neumann and Dirichlet spectra");
  PrecisionScope scope(engine.working_digits());
  const Real z = sqrt(to_current(record.lambda));
  const CornerValues cv = corner_values(engine, z, depth);
  const Ball zb(z);
  std::vector<Ball> r;
  r.reserve(cv.xs.size());
  for (std::size_t i = 0; i < cv.xs.size(); ++i) {
    const Ball dN = -(zb * cv.values[T][i]);
    const Ball dD = zb * cv.values[K][i];
    r.push_back(cv.values[C][i] * dD - cv.values[S][i] * dN - zb);
  }
  return worst_point(r);
}

}  // namespace mgl
