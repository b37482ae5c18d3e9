#include "mgl/spectrum.hpp"

#include "mgl/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>

namespace mgl {

std::string to_string(BoundaryCondition bc) {
  switch (bc) {
    case BoundaryCondition::N: return "N";
    case BoundaryCondition::D: return "D";
    case BoundaryCondition::ND: return "ND";
    case BoundaryCondition::DN: return "DN";
  }
  return "?";
}

BoundaryCondition parse_boundary_condition(const std::string& text) {
  if (text == "N" || text == "n") return BoundaryCondition::N;
  if (text == "D" || text == "d") return BoundaryCondition::D;
  if (text == "ND" || text == "nd") return BoundaryCondition::ND;
  if (text == "DN" || text == "dn") return BoundaryCondition::DN;
  throw ValidationError("unknown boundary condition '" + text + "' (expected N, D, ND or DN)");
}

TrigKind characteristic_kind(BoundaryCondition bc) {
  switch (bc) {
    case BoundaryCondition::N: return TrigKind::sinN;
    case BoundaryCondition::D: return TrigKind::sinD;
    case BoundaryCondition::ND: return TrigKind::cosN;
    case BoundaryCondition::DN: return TrigKind::cosD;
  }
  return TrigKind::sinN;
}

std::string to_string(const Provenance& p) {
  switch (p.kind) {
    case Provenance::Kind::root_found: return "root";
    case Provenance::Kind::renormalized: return "renormalized:" + std::to_string(p.source_index);
    case Provenance::Kind::synthetic: return "exact";
  }
  return "?";
}

namespace {

bool odd_characteristic(BoundaryCondition bc) {
  return bc == BoundaryCondition::N || bc == BoundaryCondition::D;
}

// Ball enclosing the exact square root of a non-negative real.
Ball sqrt_ball(const Real& lambda) {
  const Real z = sqrt(lambda);
  return Ball(z, abs(z) * unit_roundoff() * 2);
}

// F and dF/dlambda from g and dg/dz at z = sqrt(lambda).
std::pair<Ball, Ball> lambda_jet(BoundaryCondition bc, const Jet& g, const Ball& z) {
  const Ball two(Real(2));
  if (odd_characteristic(bc)) {
    const Ball F = g.v / z;
    const Ball dF = (g.d * z - g.v) / (two * z * z * z);
    return {F, dF};
  }
  return {g.v, g.d / (two * z)};
}

// Engines at increasing precision, created on demand.
class EngineLadder {
public:
  EngineLadder(const MeasureParams& params, unsigned first, unsigned ceiling)
      : params_(params), ceiling_(ceiling) {
    levels_.push_back(first);
  }
  int size() const { return static_cast<int>(levels_.size()); }
  bool can_raise(int level) const { return level + 1 < size() || levels_.back() < ceiling_; }
  const TrigEngine& at(int level) {
    while (level >= size()) levels_.push_back(std::min(ceiling_, levels_.back() * 2));
    auto it = engines_.find(levels_[level]);
    if (it == engines_.end())
      it = engines_.emplace(levels_[level], TrigEngine(params_, levels_[level])).first;
    return it->second;
  }
  unsigned digits(int level) {
    at(level);
    return levels_[level];
  }

private:
  MeasureParams params_;
  unsigned ceiling_;
  std::vector<unsigned> levels_;
  std::map<unsigned, TrigEngine> engines_;
};

struct Bracket {
  Real a, b;  // z-interval holding exactly one zero
  int sa = 0, sb = 0;
  int level = 0;
};

class Isolator {
public:
  Isolator(BoundaryCondition bc, EngineLadder& ladder) : bc_(bc), kind_(characteristic_kind(bc)), ladder_(ladder) {}

  int sign_at(const Real& z, int level) {
    const TrigEngine& e = ladder_.at(level);
    PrecisionScope scope(e.working_digits());
    return e.eval_ball(sqrt_point(z)).get(kind_).v.sign();
  }

  // Appends brackets of all zeros in [a, b] in increasing order. The signs at
  // a and b must be known and nonzero. Returns the number of subintervals
  // examined.
  int isolate(const Real& a_in, const Real& b_in, int sa, int sb, int level, std::vector<Bracket>& out) {
    const TrigEngine& e = ladder_.at(level);
    PrecisionScope scope(e.working_digits());
    // Arithmetic keeps the largest operand precision, so inputs are brought
    // to the engine precision first.
    const Real a = to_current(a_in), b = to_current(b_in);
    const Real mid = (a + b) / 2;
    const Real r = (b - a) / 2 + abs(mid) * unit_roundoff() * 4;
    // Mean-value enclosures over [mid - r, mid + r]: only the second
    // derivative is taken over the whole interval, so the overestimation of
    // interval evaluation enters at second order in r.
    const Jet p = e.eval_all(mid).get(kind_);
    const Jet x = e.eval_ball(Ball(mid, r)).get(kind_);
    const Real h = x.d2.mag();
    const Ball value(p.v.mid, p.v.radius() + r * p.d.mag() + r * r * h / 2);
    const Ball slope(p.d.mid, p.d.radius() + r * h);
    if (!value.contains_zero() || !x.v.contains_zero()) {
      if (sa != sb) throw ComputationError("inconsistent enclosure during zero isolation");
      return 1;
    }
    if (!slope.contains_zero() || !x.d.contains_zero()) {
      if (sa != sb) out.push_back({a, b, sa, sb, level});
      return 1;
    }
    const Real resolution = abs(mid) * pow10(8 - static_cast<int>(e.working_digits()));
    if (b - a <= resolution) {
      if (!ladder_.can_raise(level)) {
        PrecisionScope low(30);
        throw ClusterUnresolved("zeros of " + to_string(kind_) + " too close to separate at " +
                                    std::to_string(ladder_.digits(level)) + " digits",
                                static_cast<double>(a * a), static_cast<double>(b * b));
      }
      return isolate(a, b, sa, sb, level + 1, out);
    }
    static const double fractions[] = {0.5, 0.381966, 0.618034, 0.45, 0.55};
    for (double f : fractions) {
      const Real m = a + (b - a) * f;
      const int sm = f == 0.5 ? p.v.sign() : sign_at(m, level);
      if (sm == 0) continue;
      const int left = isolate(a, m, sa, sm, level, out);
      return 1 + left + isolate(m, b, sm, sb, level, out);
    }
    if (!ladder_.can_raise(level)) {
      PrecisionScope low(30);
      throw ClusterUnresolved("sign of " + to_string(kind_) + " undetermined near a zero",
                              static_cast<double>(a * a), static_cast<double>(b * b));
    }
    return isolate(a, b, sa, sb, level + 1, out);
  }

private:
  static Ball sqrt_point(const Real& z) { return Ball(z); }

  BoundaryCondition bc_;
  TrigKind kind_;
  EngineLadder& ladder_;
};

// Refines a bracket to relative z-width below 10^-(digits+2) by Newton steps
// in lambda safeguarded by bisection. Returns the final z-bracket.
Bracket refine(BoundaryCondition bc, Bracket br, int digits, EngineLadder& ladder, int level) {
  const TrigKind kind = characteristic_kind(bc);
  while (ladder.digits(level) < static_cast<unsigned>(digits + 12) && ladder.can_raise(level)) ++level;
  int stalled = 0;
  Real prev_width = -1;
  for (int iter = 0; iter < 2000; ++iter) {
    const TrigEngine& e = ladder.at(level);
    PrecisionScope scope(e.working_digits());
    const Real a = to_current(br.a), b = to_current(br.b);
    const Real width = b - a;
    const Real target = abs(a) * pow10(-(digits + 2));
    if (width <= target) return br;
    if (prev_width >= 0 && width > prev_width / 2) ++stalled;
    prev_width = width;

    // Newton candidate from the midpoint.
    const Real m = (a + b) / 2;
    const Jet gm = e.eval_all(m).get(kind);
    const auto [F, dF] = lambda_jet(bc, gm, Ball(m));
    Real cand = m;
    if (!dF.contains_zero() && stalled < 2) {
      const Real lam = m * m - F.mid / dF.mid;
      if (lam > a * a && lam < b * b) cand = sqrt(lam);
    }
    std::vector<Real> probes;
    if (cand != m) {
      const Real step = abs(cand - m);
      const Real delta = std::max(step / 8, target / 4);
      probes = {cand - delta, cand + delta};
    } else {
      probes = {m};
      stalled = 0;
    }
    bool progressed = false;
    bool undetermined = false;
    for (const Real& p : probes) {
      if (p <= br.a || p >= br.b) continue;
      const int s = e.eval_all(p).get(kind).v.sign();
      if (s == 0) {
        undetermined = true;
        continue;
      }
      if (s == br.sa) {
        br.a = p;
      } else {
        br.b = p;
      }
      progressed = true;
    }
    if (!progressed) {
      if (undetermined && !ladder.can_raise(level))
        throw PrecisionExhausted("eigenvalue refinement reached the precision ceiling");
      if (undetermined) {
        ++level;
      } else {
        stalled = 2;
      }
    }
  }
  throw ComputationError("eigenvalue refinement did not converge");
}

// Magnitudes log10 |c_n| of the characteristic series coefficients, cached
// per measure.
class CoefficientLogs {
public:
  static const std::vector<double>& get(const MeasureParams& params, BoundaryCondition bc, int terms) {
    static std::mutex mu;
    static std::map<std::string, std::pair<int, std::array<std::vector<double>, 4>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& entry = cache[params.canonical()];
    const int idx = static_cast<int>(bc);
    if (entry.first < terms) {
      const int n = std::max(terms, 2 * entry.first);
      const PQTable t = compute_pq_real(params, 2 * n + 2, 30);
      PrecisionScope scope(30);
      for (int k = 0; k < 4; ++k) {
        auto& v = entry.second[k];
        v.assign(n, 0.0);
        for (int j = 0; j < n; ++j) {
          const int i = (k <= 1 ? 2 * j + 1 : 2 * j);
          const Real c = (k == 0 || k == 2) ? t.p(i) : t.q(i);
          v[j] = static_cast<double>(log10(c));
        }
      }
      entry.first = n;
    }
    return entry.second[idx];
  }
};

}  // namespace

// Number of series terms whose omission changes F by less than 1e-16
// relative to the typical size |lambda F'(lambda)| at a zero.
int series_degree(const MeasureParams& params, BoundaryCondition bc, const Real& lambda,
                  const Real& derivative) {
  double log_lam, log_scale;
  {
    PrecisionScope low(30);
    if (lambda <= 0) return 0;
    log_lam = static_cast<double>(log10(to_current(lambda)));
    const Real s = abs(to_current(derivative)) * to_current(lambda);
    log_scale = s > 0 ? static_cast<double>(log10(s)) : 0.0;
  }
  const double threshold = log_scale - 16.0;
  int terms = 64;
  while (true) {
    const std::vector<double>& lc = CoefficientLogs::get(params, bc, terms);
    const int n = static_cast<int>(lc.size());
    for (int a = 1; a + 1 < n; ++a) {
      // Terms are eventually decreasing; sum a geometric majorant of the tail.
      const double t0 = lc[a] + a * log_lam;
      const double ratio = lc[a + 1] - lc[a] + log_lam;
      if (ratio < -0.3 && t0 - std::log10(1.0 - std::pow(10.0, ratio)) < threshold) return a;
    }
    if (n > 1 << 16) throw ComputationError("series degree beyond the coefficient cache");
    terms = 2 * n;
  }
}

CertifiedValue characteristic(BoundaryCondition bc, const TrigEngine& engine, const Real& lambda,
                              const Real& tol) {
  if (lambda < 0) throw ValidationError("characteristic function needs lambda >= 0");
  CertifiedValue out;
  if (lambda == 0) {
    out.value = 1;
    out.tail_bound = 0;
    return out;
  }
  constexpr unsigned ceiling = 4000;
  TrigEngine e = engine;
  while (true) {
    PrecisionScope scope(e.working_digits());
    const Ball z = sqrt_ball(to_current(lambda));
    const Jet g = e.eval_ball(z).get(characteristic_kind(bc));
    const Ball F = odd_characteristic(bc) ? g.v / z : g.v;
    if (F.radius() <= tol) {
      out.value = F.mid;
      out.tail_bound = F.radius();
      return out;
    }
    if (e.digits() >= ceiling) throw PrecisionExhausted("characteristic function tolerance unreachable");
    e = e.with_digits(std::min(ceiling, e.digits() * 3 / 2 + 10));
  }
}

namespace {

constexpr double scan_start = 0.5;

EigenvalueRecord make_record(BoundaryCondition bc, const MeasureParams& params, int index,
                             const Bracket& br, int digits, EngineLadder& ladder) {
  EigenvalueRecord r;
  r.bc = bc;
  r.index = index;
  const unsigned prec = ladder.digits(br.level) + 20;
  PrecisionScope scope(2 * prec);
  // Squares of the bracket endpoints are exact at twice the precision.
  const Real a = to_current(br.a), b = to_current(br.b);
  r.lo = a * a;
  r.hi = b * b;
  r.lambda = (r.lo + r.hi) / 2;
  {
    const Real rel = (r.hi - r.lo) / r.lambda;
    PrecisionScope low(30);
    r.digits = rel > 0 ? static_cast<int>(std::floor(-static_cast<double>(log10(to_current(rel)))))
                       : static_cast<int>(prec);
  }
  r.digits = std::max(r.digits, 0);
  (void)digits;
  r.provenance.kind = Provenance::Kind::root_found;
  const TrigEngine& e = ladder.at(0);
  Real derivative;
  {
    PrecisionScope s(e.working_digits());
    const Real z = sqrt(to_current(r.lambda));
    derivative = lambda_jet(bc, e.eval_all(z).get(characteristic_kind(bc)), Ball(z)).second.mid;
  }
  r.degree_used = series_degree(params, bc, r.lambda, derivative);
  return r;
}

EigenvalueRecord zero_record() {
  EigenvalueRecord r;
  r.bc = BoundaryCondition::N;
  r.index = 0;
  r.lambda = 0;
  r.lo = 0;
  r.hi = 0;
  r.digits = std::numeric_limits<int>::max();
  r.provenance.kind = Provenance::Kind::synthetic;
  r.degree_used = 0;
  return r;
}

// Isolates zeros from the scan start until `count` are found or z exceeds
// z_max (count < 0 means unbounded count).
std::vector<Bracket> scan(BoundaryCondition bc, EngineLadder& ladder, int count, double z_max,
                          double step) {
  Isolator iso(bc, ladder);
  std::vector<Bracket> out;
  // On [0, 1/2] every characteristic function stays within exp(c z^2) - 1 <
  // 0.3 of its value 1 at the origin (coefficients are bounded by c^n/n! with
  // c <= 1), so no zero lies below the scan start.
  PrecisionScope scope(ladder.digits(0));
  Real a = to_current(Real(scan_start));
  int sa = iso.sign_at(a, 0);
  if (sa <= 0) throw ComputationError("characteristic function not positive at the scan start");
  // The step grows while whole steps are settled at once and shrinks when
  // they need subdivision.
  const double max_step = 8 * step;
  const double min_step = step / 16;
  while (count < 0 || static_cast<int>(out.size()) < count) {
    if (a >= z_max) break;
    Real b = a + step;
    if (b > z_max) b = z_max;
    int sb = iso.sign_at(b, 0);
    int level = 0;
    while (sb == 0) {
      b += step * 0.0137;
      sb = iso.sign_at(b, level);
    }
    const int examined = iso.isolate(a, b, sa, sb, 0, out);
    if (examined == 1) {
      step = std::min(max_step, step * 1.5);
    } else if (examined > 3) {
      step = std::max(min_step, step / 2);
    }
    a = b;
    sa = sb;
  }
  if (count >= 0 && static_cast<int>(out.size()) > count) out.resize(count);
  return out;
}

void check_renormalization(const MeasureParams& params, const std::vector<EigenvalueRecord>& recs) {
  const MeasureClass cls = classify(params);
  if (!cls.has_renormalization || recs.empty() || recs.front().bc != BoundaryCondition::N) return;
  PrecisionScope scope(static_cast<unsigned>(params.working_digits() + 40));
  const Real R = to_current(*cls.renorm_factor);
  const Real slack = R * pow10(8 - static_cast<int>(params.working_digits()));
  for (const auto& r : recs) {
    const int m = r.index;
    if (m < 1 || 2 * m > recs.back().index) continue;
    const auto& s = *std::find_if(recs.begin(), recs.end(), [m](const auto& x) { return x.index == 2 * m; });
    const Real lo = R * r.lo * (1 - slack), hi = R * r.hi * (1 + slack);
    if (s.hi < lo || s.lo > hi)
      throw ComputationError("index inconsistency: lambda_" + std::to_string(2 * m) +
                             " does not match the rescaled lambda_" + std::to_string(m));
  }
}

std::vector<EigenvalueRecord> assemble(BoundaryCondition bc, const MeasureParams& params,
                                       const std::vector<Bracket>& brackets, int digits,
                                       EngineLadder& ladder, const SpectrumOptions& options) {
  std::vector<EigenvalueRecord> recs;
  if (bc == BoundaryCondition::N) recs.push_back(zero_record());
  const MeasureClass cls = classify(params);
  const bool rescale = options.use_renormalization && bc == BoundaryCondition::N && cls.has_renormalization;
  for (std::size_t i = 0; i < brackets.size(); ++i) {
    const int index = static_cast<int>(i) + 1;
    if (rescale && index % 2 == 0) {
      EigenvalueRecord r = renormalize_up(params, recs[index / 2]);
      PrecisionScope scope(2 * (ladder.digits(0) + 40));
      const Real a = to_current(brackets[i].a), b = to_current(brackets[i].b);
      if (r.hi < a * a || r.lo > b * b)
        throw ComputationError("renormalized eigenvalue outside its isolating interval");
      recs.push_back(r);
      continue;
    }
    const Bracket fine = refine(bc, brackets[i], digits, ladder, brackets[i].level);
    recs.push_back(make_record(bc, params, index, fine, digits, ladder));
  }
  check_renormalization(params, recs);
  return recs;
}

unsigned scan_digits(int digits) { return static_cast<unsigned>(std::max(30, digits / 2)); }

}  // namespace

std::vector<EigenvalueRecord> find_eigenvalues(BoundaryCondition bc, const MeasureParams& params,
                                               int count, int digits, const SpectrumOptions& options) {
  if (count < 0) throw ValidationError("eigenvalue count must be non-negative");
  if (digits < 1) throw ValidationError("digits must be positive");
  EngineLadder ladder(params, scan_digits(digits), options.precision_ceiling);
  const auto brackets = scan(bc, ladder, count, std::numeric_limits<double>::infinity(), options.scan_step);
  return assemble(bc, params, brackets, digits, ladder, options);
}

std::vector<EigenvalueRecord> find_eigenvalues_below(BoundaryCondition bc, const MeasureParams& params,
                                                     double lambda_max, int digits,
                                                     const SpectrumOptions& options) {
  if (!(lambda_max > 0)) throw ValidationError("lambda_max must be positive");
  if (digits < 1) throw ValidationError("digits must be positive");
  EngineLadder ladder(params, scan_digits(digits), options.precision_ceiling);
  const auto brackets = scan(bc, ladder, -1, std::sqrt(lambda_max), options.scan_step);
  return assemble(bc, params, brackets, digits, ladder, options);
}

EigenvalueRecord renormalize_up(const MeasureParams& params, const EigenvalueRecord& record) {
  const MeasureClass cls = classify(params);
  if (!cls.has_renormalization) throw ValidationError("measure has no renormalization (r1 m1 != r2 m2)");
  if (record.bc != BoundaryCondition::N) throw ValidationError("renormalization applies to Neumann eigenvalues");
  EigenvalueRecord r = record;
  r.index = 2 * record.index;
  r.provenance.kind = Provenance::Kind::renormalized;
  r.provenance.source_index = record.index;
  const unsigned prec = std::max<unsigned>(current_digits(), params.working_digits() + 40);
  PrecisionScope scope(prec);
  Real R;
  if (cls.renorm_factor_exact) {
    R = to_real(*cls.renorm_factor_exact);
  } else {
    R = to_current(*cls.renorm_factor);
  }
  const Real u = cls.renorm_factor_exact ? unit_roundoff() * 4 : pow10(5 - params.working_digits());
  r.lambda = R * to_current(record.lambda);
  r.lo = R * to_current(record.lo) * (1 - u);
  r.hi = R * to_current(record.hi) * (1 + u);
  if (record.index > 0) {
    const Real rel = (r.hi - r.lo) / r.lambda;
    PrecisionScope low(30);
    r.digits = std::min(record.digits, static_cast<int>(std::floor(-static_cast<double>(log10(to_current(rel))))));
    const TrigEngine engine(params, 30);
    PrecisionScope s(engine.working_digits());
    const Real z = sqrt(to_current(r.lambda));
    const Real derivative =
        lambda_jet(BoundaryCondition::N, engine.eval_all(z).sinN, Ball(z)).second.mid;
    r.degree_used = series_degree(params, BoundaryCondition::N, r.lambda, derivative);
  }
  return r;
}

LiftResult dn_lift_symmetric(const MeasureParams& params, const Real& lambda_dn, int digits) {
  const MeasureClass cls = classify(params);
  if (!cls.is_symmetric) throw ValidationError("the DN lift needs a symmetric measure");
  TrigEngine engine(params, static_cast<unsigned>(digits + 10));
  PrecisionScope scope(engine.working_digits());
  const Real r = params.real().r1;
  LiftResult out;
  out.lifted = 2 * to_current(lambda_dn) / r;
  const Ball z = sqrt_ball(out.lifted);
  const Jet g = engine.eval_ball(z).get(TrigKind::sinD);
  const auto [F, dF] = lambda_jet(BoundaryCondition::D, g, z);
  out.residual = F.mid;
  out.residual_bound = F.radius();
  out.derivative = dF.mid;
  // lambda_dn is known to `digits` significant digits.
  const Real value_uncertainty = abs(dF.mid) * out.lifted * pow10(-digits) + F.radius();
  out.consistent = abs(F.mid) <= value_uncertainty;
  return out;
}

int two_adic_valuation(long long m) {
  if (m <= 0) throw ValidationError("two-adic valuation needs a positive integer");
  int k = 0;
  while (m % 2 == 0) {
    m /= 2;
    ++k;
  }
  return k;
}

InterlacingReport interlacing_report(const std::vector<EigenvalueRecord>& neumann,
                                     const std::vector<EigenvalueRecord>& dirichlet, bool strict) {
  InterlacingReport rep;
  struct Item {
    InterlacingEntry e;
    Real lo, hi;
  };
  std::vector<Item> items;
  Real top_n = -1, top_d = -1;
  for (const auto& r : neumann) {
    if (r.bc != BoundaryCondition::N) throw ValidationError("expected Neumann records");
    if (r.index == 0) continue;
    top_n = std::max(top_n, r.hi);
  }
  for (const auto& r : dirichlet) {
    if (r.bc != BoundaryCondition::D) throw ValidationError("expected Dirichlet records");
    top_d = std::max(top_d, r.hi);
  }
  const Real top = std::min(top_n, top_d);
  for (const auto* list : {&neumann, &dirichlet})
    for (const auto& r : *list)
      if (r.index > 0 && r.lo <= top) items.push_back({{r.bc, r.index, r.lambda}, r.lo, r.hi});
  std::sort(items.begin(), items.end(), [](const Item& x, const Item& y) { return x.e.lambda < y.e.lambda; });

  auto expected = [](std::size_t k) { return ((k + 1) / 2) % 2 == 1 ? BoundaryCondition::D : BoundaryCondition::N; };
  auto overlap = [](const Item& x, const Item& y) { return !(x.hi < y.lo || y.hi < x.lo); };
  for (std::size_t k = 0; k + 1 < items.size(); ++k) {
    if (items[k].e.bc != items[k + 1].e.bc && overlap(items[k], items[k + 1])) {
      if (strict)
        throw OverlapUnresolvable("enclosures of " + to_string(items[k].e.bc) + std::to_string(items[k].e.index) +
                                  " and " + to_string(items[k + 1].e.bc) + std::to_string(items[k + 1].e.index) +
                                  " overlap");
      ++rep.ties;
      // Order tied values as the pattern expects.
      if (items[k].e.bc != expected(k)) std::swap(items[k], items[k + 1]);
      ++k;
    }
  }
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (items[k].e.bc != expected(k)) {
      rep.first_violation = static_cast<int>(k);
      break;
    }
  }
  for (const auto& it : items) rep.merged.push_back(it.e);
  rep.pattern_holds = rep.first_violation < 0;
  if (!rep.pattern_holds) {
    const auto& e = items[rep.first_violation].e;
    rep.verdict = "pattern violated at position " + std::to_string(rep.first_violation) + " (" +
                  to_string(e.bc) + std::to_string(e.index) + ")";
  } else if (rep.ties > 0) {
    rep.verdict = "pattern holds with " + std::to_string(rep.ties) + " degenerate N/D ties";
  } else {
    rep.verdict = "pattern holds strictly on " + std::to_string(items.size()) + " eigenvalues";
  }
  return rep;
}

}  // namespace mgl
