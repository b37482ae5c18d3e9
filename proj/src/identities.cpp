#include "mgl/identities.hpp"

#include "mgl/errors.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace mgl {

bool VerificationReport::pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const CheckEntry& e) { return e.pass; });
}

int VerificationReport::failures() const {
  return static_cast<int>(
      std::count_if(entries.begin(), entries.end(), [](const CheckEntry& e) { return !e.pass; }));
}

void VerificationReport::add(const std::string& name, const std::string& inputs, const Ball& r) {
  CheckEntry e;
  e.name = name;
  e.inputs = inputs;
  e.residual = abs(r.mid);
  e.bound = r.radius();
  e.pass = e.residual <= e.bound;
  entries.push_back(std::move(e));
}

void VerificationReport::add_exact(const std::string& name, const std::string& inputs,
                                   const Rational& r) {
  CheckEntry e;
  e.name = name;
  e.inputs = inputs;
  e.residual = abs(to_real(r));
  e.bound = 0;
  e.exact = true;
  e.pass = r == 0;
  entries.push_back(std::move(e));
}

namespace {

std::string z_label(const Real& z) { return "z=" + to_sig(z, 8); }

// Parameters as balls at the current precision.
struct ParamBalls {
  Ball r1, r2, m1, m2, gap, a1;
};

ParamBalls param_balls(const MeasureParams& params) {
  const RealParams v = params.real();
  const Real u = unit_roundoff() * (params.natural_weights() ? 64 : 2);
  auto ball = [&u](const Real& x) { return Ball(x, abs(x) * u); };
  ParamBalls b;
  b.r1 = ball(v.r1);
  b.r2 = ball(v.r2);
  b.m1 = ball(v.m1);
  b.m2 = ball(v.m2);
  if (params.is_exact()) {
    const auto& q = params.rationals();
    b.gap = ball(to_real(1 - q[0] - q[1]));
  } else {
    b.gap = Ball(Real(1)) - b.r1 - b.r2;
  }
  b.a1 = ball(sqrt(v.r1 * v.m1));
  return b;
}

Ball h_of(const ParamBalls& k, const TrigQuad& q, const Ball& z) {
  return k.r1 * q.cosN.v + k.r2 * q.cosD.v - k.gap * z * q.sinN.v;
}

TrigQuad eval_at(const TrigEngine& engine, const Ball& z) {
  return z.rad.is_zero() ? engine.eval_all(z.mid) : engine.eval_ball(z);
}

// sum_i coef_i a_i b_i over table entries, exactly or as a ball whose radius
// covers the table error bounds and the rounding of the sum.
struct Term {
  int coef;
  char a;
  int ia;
  char b;
  int ib;
};

class CoefficientSum {
public:
  explicit CoefficientSum(const PQTable& t) : t_(t) {}

  void add(const std::string& name, const std::string& inputs, const std::vector<Term>& terms,
           VerificationReport& report) const {
    if (t_.is_exact()) {
      Rational s = 0;
      for (const Term& term : terms) s += term.coef * exact(term.a, term.ia) * exact(term.b, term.ib);
      report.add_exact(name, inputs, s);
      return;
    }
    PrecisionScope scope(t_.digits);
    Real s = 0;
    Real mag = 0;
    Real rel = 0;
    for (const Term& term : terms) {
      const Real x = term.coef * real(term.a, term.ia) * real(term.b, term.ib);
      s += x;
      mag += abs(x);
      rel = std::max<Real>(rel, t_.rel_error(term.ia) + t_.rel_error(term.ib));
    }
    const Real u = unit_roundoff();
    report.add(name, inputs,
               Ball(s, mag * (rel + (static_cast<int>(terms.size()) + 4) * u * 2)));
  }

private:
  Rational exact(char which, int n) const { return which == 'p' ? t_.p_exact.at(n) : t_.q_exact.at(n); }
  Real real(char which, int n) const { return which == 'p' ? t_.p(n) : t_.q(n); }

  const PQTable& t_;
};

VerificationReport new_report(const std::string& suite, const MeasureParams& params, int digits) {
  VerificationReport r;
  r.suite = suite;
  r.params = params.canonical();
  r.working_digits = digits;
  return r;
}

void add_pointwise(VerificationReport& report, const std::string& name, const std::string& inputs,
                   const PointwiseResidual& p) {
  CheckEntry e;
  e.name = name;
  e.inputs = inputs + " points=" + std::to_string(p.points);
  e.residual = p.residual;
  e.bound = p.bound;
  e.pass = p.pass;
  report.entries.push_back(std::move(e));
}

}  // namespace

CertifiedValue h_value(const TrigEngine& engine, const Real& z) {
  PrecisionScope scope(engine.working_digits());
  const ParamBalls k = param_balls(engine.params());
  const Ball zb(to_current(z));
  const Ball h = h_of(k, engine.eval_all(zb.mid), zb);
  CertifiedValue out;
  out.value = h.mid;
  out.tail_bound = h.radius();
  return out;
}

std::vector<Real> log_grid(const Real& z_max, int n) {
  if (n < 1) throw ValidationError("a grid needs at least one point");
  std::vector<Real> out;
  const Real lo = z_max / 1000;
  for (int i = 0; i < n; ++i) {
    const Real t = n == 1 ? Real(1) : Real(i) / (n - 1);
    out.push_back(lo * pow(Real(1000), t));
  }
  out.back() = z_max;
  return out;
}

VerificationReport pythagorean_suite(const TrigEngine& engine, const std::vector<Real>& zs,
                                     int depth) {
  VerificationReport report = new_report("pythagorean", engine.params(), engine.digits());
  PrecisionScope scope(engine.working_digits());
  const Ball one(Real(1));
  for (const Real& z : zs) {
    const TrigQuad q = engine.eval_all(z);
    report.add("cosD cosN + sinD sinN = 1", z_label(z),
               q.cosD.v * q.cosN.v + q.sinD.v * q.sinN.v - one);
  }
  const std::size_t step = std::max<std::size_t>(1, zs.size() / 4);
  for (std::size_t i = step - 1; i < zs.size(); i += step)
    add_pointwise(report, "c_lm c_ml + s_lm s_ml = 1 at corner points",
                  z_label(zs[i]) + " depth=" + std::to_string(depth),
                  pythagorean_check(engine, zs[i], depth));
  return report;
}

VerificationReport functional_equation_suite(const MeasureParams& params,
                                             const std::vector<Real>& zs, int digits) {
  VerificationReport report = new_report("functional", params, digits);
  Real z_max = 0;
  for (const Real& z : zs) z_max = std::max<Real>(z_max, abs(z));
  PrecisionScope scope(static_cast<unsigned>(digits + 20));
  const DirectTrig direct(params, z_max, static_cast<unsigned>(digits));
  static const char* names[4] = {"functional equation sinN", "functional equation sinD",
                                 "functional equation cosN", "functional equation cosD"};
  for (const Real& z : zs) {
    const FunctionalResiduals r = functional_equation_residuals(direct, z);
    for (int i = 0; i < 4; ++i) {
      CheckEntry e;
      e.name = names[i];
      e.inputs = z_label(z);
      e.residual = abs(r.residual[i]);
      e.bound = r.bound[i];
      e.pass = e.residual <= e.bound;
      report.entries.push_back(std::move(e));
    }
  }
  return report;
}

VerificationReport rearranged_equation_suite(const TrigEngine& engine, const std::vector<Real>& zs) {
  if (!classify(engine.params()).has_renormalization)
    throw ValidationError("the rearranged equations need r1 m1 = r2 m2");
  VerificationReport report = new_report("rearranged", engine.params(), engine.digits());
  PrecisionScope scope(engine.working_digits());
  const ParamBalls k = param_balls(engine.params());
  for (const Real& z : zs) {
    const Ball zb(to_current(z));
    const TrigQuad q = engine.eval_all(zb.mid);
    const Ball w = k.a1 * zb;
    const TrigQuad s = eval_at(engine, w);
    const Ball h = h_of(k, s, w);
    report.add("sinN(z) = a1/(r1 r2) sinN(a1 z) h(a1 z)", z_label(z),
               q.sinN.v - k.a1 / (k.r1 * k.r2) * s.sinN.v * h);
    report.add("cosN(z) = -r2/r1 + cosN(a1 z) h(a1 z)/r1", z_label(z),
               q.cosN.v - (-(k.r2 / k.r1) + s.cosN.v * h / k.r1));
    report.add("sinD(z) = (1-r1-r2) z + sinD(a1 z) h(a1 z)/a1", z_label(z),
               q.sinD.v - (k.gap * zb + s.sinD.v * h / k.a1));
    report.add("cosD(z) = -r1/r2 + cosD(a1 z) h(a1 z)/r2", z_label(z),
               q.cosD.v - (-(k.r1 / k.r2) + s.cosD.v * h / k.r2));
  }
  return report;
}

void eigen_zero_values(const MeasureParams& params, const TrigEngine& engine,
                       const EigenvalueRecord& record, VerificationReport& report) {
  if (!classify(params).has_renormalization)
    throw ValidationError("the eigen-zero values need r1 m1 = r2 m2");
  if (record.bc != BoundaryCondition::N || record.index < 1)
    throw ValidationError("the eigen-zero values are stated for Neumann eigenvalues with m >= 1");
  PrecisionScope scope(engine.working_digits());
  const ParamBalls k = param_balls(params);
  const int v = two_adic_valuation(record.index);
  const Ball z = z_enclosure(record);
  const TrigQuad q = engine.eval_ball(z);
  const std::string in = "m=" + std::to_string(record.index) + " v=" + std::to_string(v);

  // rho^(2^j) by repeated squaring.
  auto power = [](Ball b, int j) {
    for (int i = 0; i < j; ++i) b = b * b;
    return b;
  };
  const Ball rho_n = -(k.r2 / k.r1);
  const Ball rho_d = -(k.r1 / k.r2);
  // a_0 = 1 - (r1 + r2), a_j = 1 - (r1 + r2) + a_{j-1} h_{j-1} with
  // h_j = r1 rho_n^(2^j) + r2 rho_d^(2^j).
  Ball a = k.gap;
  for (int j = 1; j <= v; ++j) a = k.gap + a * (k.r1 * power(rho_n, j - 1) + k.r2 * power(rho_d, j - 1));

  report.add("cosN(z_m) = (-r2/r1)^(2^v)", in, q.cosN.v - power(rho_n, v));
  report.add("cosD(z_m) = (-r1/r2)^(2^v)", in, q.cosD.v - power(rho_d, v));
  report.add("sinD(z_m) = a_v z_m", in, q.sinD.v - a * z);
  report.add("h(z_m) = r1 (-r2/r1)^(2^v) + r2 (-r1/r2)^(2^v)", in,
             h_of(k, q, z) - (k.r1 * power(rho_n, v) + k.r2 * power(rho_d, v)));
  if (v == 0) {
    const Ball w = k.a1 * z;
    report.add("h(sqrt(r1 m1) z_m) = 0", in, h_of(k, engine.eval_ball(w), w));
  }
}

VerificationReport eigen_zero_suite(const MeasureParams& params, const TrigEngine& engine,
                                    const std::vector<EigenvalueRecord>& neumann) {
  VerificationReport report = new_report("eigen_zero", params, engine.digits());
  for (const EigenvalueRecord& r : neumann)
    if (r.index >= 1) eigen_zero_values(params, engine, r, report);
  return report;
}

VerificationReport symmetric_suite(const PQTable& table, const TrigEngine& engine,
                                   const std::vector<Real>& zs, int depth) {
  if (!classify(table.params).is_symmetric)
    throw ValidationError("the symmetric suite needs r1 = r2 and m1 = m2");
  VerificationReport report = new_report("symmetric", table.params, engine.digits());
  const CoefficientSum sum(table);
  for (int n = 1; 2 * n + 1 <= table.n_max; ++n) {
    std::vector<Term> terms;
    for (int k = 0; k <= n; ++k) {
      terms.push_back({1, 'p', 2 * k, 'p', 2 * n - 2 * k + 1});
      terms.push_back({-1, 'p', 2 * k + 1, 'q', 2 * n - 2 * k});
    }
    sum.add("sum p_2k p_2n-2k+1 = sum p_2k+1 q_2n-2k", "n=" + std::to_string(n), terms, report);
  }
  for (int n = 1; 2 * n <= table.n_max; ++n) {
    sum.add("p_2n = q_2n", "n=" + std::to_string(n), {{1, 'p', 2 * n, 'p', 0}, {-1, 'q', 2 * n, 'p', 0}},
            report);
    // 2 p_{2n} = sum_{k=1}^{2n-1} (-1)^(k+1) p_k q_{2n-k}
    std::vector<Term> terms{{2, 'p', 2 * n, 'p', 0}};
    for (int k = 1; k <= 2 * n - 1; ++k) terms.push_back({k % 2 == 1 ? -1 : 1, 'p', k, 'q', 2 * n - k});
    sum.add("p_2n = (1/2) sum (-1)^(k+1) p_k q_2n-k", "n=" + std::to_string(n), terms, report);
  }

  PrecisionScope scope(engine.working_digits());
  const Ball one(Real(1));
  for (const Real& z : zs) {
    const TrigQuad q = engine.eval_all(z);
    report.add("cosN = cosD", z_label(z), q.cosN.v - q.cosD.v);
    report.add("cosN^2 + sinN sinD = 1", z_label(z), q.cosN.v * q.cosN.v + q.sinN.v * q.sinD.v - one);
  }
  const std::size_t step = std::max<std::size_t>(1, zs.size() / 4);
  for (std::size_t i = step - 1; i < zs.size(); i += step) {
    const CornerValues cv = corner_values(engine, zs[i], depth);
    const TrigQuad q = engine.eval_all(zs[i]);
    const auto& c = cv.values[static_cast<int>(Family::c_lm)];
    const auto& s = cv.values[static_cast<int>(Family::s_lm)];
    const std::size_t n = cv.xs.size();
    std::vector<Ball> rc, rs;
    for (std::size_t j = 0; j < n; ++j) {
      rc.push_back(c[n - 1 - j] - (q.cosN.v * c[j] + q.sinN.v * s[j]));
      rs.push_back(s[n - 1 - j] - (q.sinD.v * c[j] - q.cosD.v * s[j]));
    }
    const std::string in = z_label(zs[i]) + " depth=" + std::to_string(depth);
    add_pointwise(report, "c_lm(z,1-x) = cosN c_lm(z,x) + sinN s_lm(z,x)", in, worst_point(rc));
    add_pointwise(report, "s_lm(z,1-x) = sinD c_lm(z,x) - cosD s_lm(z,x)", in, worst_point(rs));
  }
  return report;
}

VerificationReport coincidence_suite(const PQTable& table, const TrigEngine& engine,
                                     const std::vector<EigenvalueRecord>& neumann, int depth) {
  if (!classify(table.params).dirichlet_equals_neumann)
    throw ValidationError("the coincidence suite needs r1 = m2 and r2 = m1");
  VerificationReport report = new_report("coincidence", table.params, engine.digits());
  const CoefficientSum sum(table);
  for (int n = 0; 2 * n + 1 <= table.n_max; ++n)
    sum.add("p_2n+1 = q_2n+1", "n=" + std::to_string(n),
            {{1, 'p', 2 * n + 1, 'p', 0}, {-1, 'q', 2 * n + 1, 'p', 0}}, report);
  for (const EigenvalueRecord& r : neumann) {
    if (r.index < 1) continue;
    add_pointwise(report, "f_N f_D' - f_D f_N' = sqrt(lambda)",
                  "m=" + std::to_string(r.index) + " depth=" + std::to_string(depth),
                  wronskian_check(table.params, r, engine, depth));
  }
  return report;
}

VerificationReport coefficient_suite(const PQTable& table) {
  VerificationReport report =
      new_report("coefficients", table.params, table.is_exact() ? 0 : static_cast<int>(table.digits));
  const CoefficientSum sum(table);
  for (int n = 1; 2 * n <= table.n_max; ++n) {
    std::vector<Term> terms;
    for (int j = 0; j <= 2 * n; ++j) terms.push_back({j % 2 == 0 ? 1 : -1, 'q', j, 'p', 2 * n - j});
    sum.add("sum (-1)^j q_j p_2n-j = 0", "n=" + std::to_string(n), terms, report);
  }
  if (table.is_exact()) {
    static const char* names[4] = {"binomial recursion p_2n", "binomial recursion q_2n",
                                   "binomial recursion p_2n+1", "binomial recursion q_2n+1"};
    for (int n = 1; 2 * n + 1 <= table.n_max; ++n) {
      const auto r = binomial_analogue_check(table, n);
      for (int i = 0; i < 4; ++i) report.add_exact(names[i], "n=" + std::to_string(n), *r[i].exact);
    }
  }
  return report;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"coefficients", "pythagorean", "functional",
                                              "rearranged",   "eigen_zero",  "symmetric",
                                              "coincidence"};
  return names;
}

bool suite_applies(const std::string& suite, const MeasureParams& params) {
  const MeasureClass c = classify(params);
  if (suite == "rearranged" || suite == "eigen_zero") return c.has_renormalization;
  if (suite == "symmetric") return c.is_symmetric;
  if (suite == "coincidence") return c.dirichlet_equals_neumann;
  if (suite == "coefficients" || suite == "pythagorean" || suite == "functional") return true;
  throw ValidationError("unknown suite '" + suite + "'");
}

std::vector<VerificationReport> run_suites(const std::vector<std::string>& selection,
                                           const MeasureParams& params,
                                           const SuiteOptions& options) {
  std::vector<std::string> chosen;
  const bool all = std::find(selection.begin(), selection.end(), "all") != selection.end();
  for (const std::string& name : suite_names()) {
    const bool named = std::find(selection.begin(), selection.end(), name) != selection.end();
    if (!all && !named) continue;
    if (!suite_applies(name, params)) {
      if (named)
        throw ValidationError("suite '" + name + "' does not apply to parameters " +
                              params.canonical());
      continue;
    }
    chosen.push_back(name);
  }
  for (const std::string& s : selection)
    if (s != "all") suite_applies(s, params);  // rejects unknown names

  const MeasureParams p = params.with_digits(options.digits);
  const PQTable table = compute_pq(p, options.n_max);
  const TrigEngine engine(p, static_cast<unsigned>(options.digits));
  std::vector<EigenvalueRecord> neumann;
  auto need_neumann = [&]() -> const std::vector<EigenvalueRecord>& {
    if (neumann.empty())
      neumann = find_eigenvalues(BoundaryCondition::N, p, options.eigen_count, options.digits);
    return neumann;
  };
  std::vector<Real> grid, fe_grid;
  {
    PrecisionScope scope(engine.working_digits());
    grid = log_grid(Real(options.z_max), options.grid_points);
    fe_grid = log_grid(Real(options.fe_z_max), options.grid_points);
  }

  std::vector<VerificationReport> out;
  for (const std::string& name : chosen) {
    if (name == "coefficients") out.push_back(coefficient_suite(table));
    if (name == "pythagorean") out.push_back(pythagorean_suite(engine, grid, options.depth));
    if (name == "functional") out.push_back(functional_equation_suite(p, fe_grid, options.digits));
    if (name == "rearranged") out.push_back(rearranged_equation_suite(engine, grid));
    if (name == "eigen_zero") out.push_back(eigen_zero_suite(p, engine, need_neumann()));
    if (name == "symmetric") out.push_back(symmetric_suite(table, engine, grid, options.depth));
    if (name == "coincidence")
      out.push_back(coincidence_suite(table, engine, need_neumann(), options.depth));
  }
  return out;
}

std::string render_table(const VerificationReport& report) {
  std::ostringstream os;
  os << "suite " << report.suite << "  params " << report.params << "  digits "
     << report.working_digits << "  " << (report.pass() ? "PASS" : "FAIL") << " ("
     << report.entries.size() - report.failures() << "/" << report.entries.size() << ")\n";
  std::size_t wn = 4, wi = 6;
  for (const CheckEntry& e : report.entries) {
    wn = std::max(wn, e.name.size());
    wi = std::max(wi, e.inputs.size());
  }
  os << std::left << std::setw(static_cast<int>(wn)) << "name" << "  " << std::setw(static_cast<int>(wi))
     << "inputs" << "  " << std::setw(10) << "residual" << "  " << std::setw(10) << "bound"
     << "  status\n";
  for (const CheckEntry& e : report.entries) {
    os << std::left << std::setw(static_cast<int>(wn)) << e.name << "  "
       << std::setw(static_cast<int>(wi)) << e.inputs << "  " << std::setw(10)
       << (e.exact ? (e.residual == 0 ? std::string("0") : to_sci(e.residual, 3)) : to_sci(e.residual, 3))
       << "  " << std::setw(10) << (e.exact ? std::string("exact") : to_sci(e.bound, 3)) << "  "
       << (e.pass ? "pass" : "FAIL") << "\n";
  }
  return os.str();
}

}  // namespace mgl
