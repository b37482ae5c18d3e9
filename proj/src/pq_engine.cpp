#include "mgl/pq_engine.hpp"

#include "mgl/errors.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

namespace mgl {

Value Value::of(const Rational& q) {
  Value v;
  v.exact = q;
  v.approx = to_real(q);
  return v;
}

Value Value::of(const Real& r) {
  Value v;
  v.approx = r;
  return v;
}

Real Value::real() const { return exact ? to_real(*exact) : to_current(approx); }

std::string Value::str(int digits) const {
  if (exact) return to_string(*exact);
  return to_sci(approx, digits);
}

Real PQTable::p(int n) const { return is_exact() ? to_real(p_exact.at(n)) : to_current(p_real.at(n)); }
Real PQTable::q(int n) const { return is_exact() ? to_real(q_exact.at(n)) : to_current(q_real.at(n)); }

Value PQTable::p_value(int n) const {
  return is_exact() ? Value::of(p_exact.at(n)) : Value::of(p_real.at(n));
}

Value PQTable::q_value(int n) const {
  return is_exact() ? Value::of(q_exact.at(n)) : Value::of(q_real.at(n));
}

Real PQTable::rel_error(int n) const {
  if (is_exact()) return Real(0);
  PrecisionScope scope(digits);
  const Real u = unit_roundoff();
  Real e = u * err_units.at(n);
  return to_current(e);
}

namespace {

constexpr int guard_digits = 20;

// Powers and the gap constant g = 1 - r1 - r2 for one scalar type.
template <class T>
struct Powers {
  std::vector<T> A, B, R1, M1, R2, M2;
  T g;

  Powers(const T& r1, const T& r2, const T& m1, const T& m2, int count) {
    auto fill = [count](std::vector<T>& v, const T& x) {
      v.resize(count + 1);
      v[0] = T(1);
      for (int i = 1; i <= count; ++i) v[i] = v[i - 1] * x;
    };
    fill(A, r1 * m1);
    fill(B, r2 * m2);
    fill(R1, r1);
    fill(M1, m1);
    fill(R2, r2);
    fill(M2, m2);
    g = T(1) - r1 - r2;
  }
};

// The three sums of one identity at level n. `full` selects the unsolved
// form (both boundary terms kept) instead of the solved recursion.
template <class T>
struct Level {
  const Powers<T>& w;
  const std::vector<T>& p;
  const std::vector<T>& q;
  int n;
  bool full;

  T p_even() const {
    T s1(0), s2(0), s3(0);
    for (int i = full ? 0 : 1; i <= (full ? n : n - 1); ++i)
      s1 += w.A[i] * w.B[n - i] * p[2 * i] * p[2 * n - 2 * i];
    for (int i = 0; i <= n - 1; ++i) {
      s2 += w.R1[i] * w.M1[i + 1] * w.R2[n - i] * w.M2[n - i - 1] * p[2 * i + 1] * q[2 * n - 2 * i - 1];
      s3 += w.R1[i] * w.M1[i + 1] * w.B[n - i - 1] * p[2 * i + 1] * p[2 * n - 2 * i - 2];
    }
    return s1 + s2 + w.g * s3;
  }

  T q_even() const {
    T s1(0), s2(0), s3(0);
    for (int i = full ? 0 : 1; i <= (full ? n : n - 1); ++i)
      s1 += w.A[i] * w.B[n - i] * q[2 * i] * q[2 * n - 2 * i];
    for (int i = 0; i <= n - 1; ++i) {
      s2 += w.R1[i + 1] * w.M1[i] * w.R2[n - i - 1] * w.M2[n - i] * q[2 * i + 1] * p[2 * n - 2 * i - 1];
      s3 += w.A[i] * w.R2[n - i - 1] * w.M2[n - i] * q[2 * i] * p[2 * n - 2 * i - 1];
    }
    return s1 + s2 + w.g * s3;
  }

  T p_odd() const {
    T s1(0), s2(0), s3(0);
    for (int i = 0; i <= (full ? n : n - 1); ++i)
      s1 += w.R1[i] * w.M1[i + 1] * w.B[n - i] * p[2 * i + 1] * q[2 * n - 2 * i];
    for (int i = full ? 0 : 1; i <= n; ++i)
      s2 += w.A[i] * w.R2[n - i] * w.M2[n - i + 1] * p[2 * i] * p[2 * n - 2 * i + 1];
    for (int i = 0; i <= n - 1; ++i)
      s3 += w.R1[i] * w.M1[i + 1] * w.R2[n - i - 1] * w.M2[n - i] * p[2 * i + 1] * p[2 * n - 2 * i - 1];
    return s1 + s2 + w.g * s3;
  }

  T q_odd() const {
    T s1(0), s2(0), s3(0);
    for (int i = 0; i <= (full ? n : n - 1); ++i)
      s1 += w.R1[i + 1] * w.M1[i] * w.B[n - i] * q[2 * i + 1] * p[2 * n - 2 * i];
    for (int i = full ? 0 : 1; i <= n; ++i)
      s2 += w.A[i] * w.R2[n - i + 1] * w.M2[n - i] * q[2 * i] * q[2 * n - 2 * i + 1];
    for (int i = 0; i <= n; ++i)
      s3 += w.A[i] * w.B[n - i] * q[2 * i] * p[2 * n - 2 * i];
    return s1 + s2 + w.g * s3;
  }
};

template <class T>
struct Denominators {
  T even, p_odd, q_odd;
};

template <class T>
Denominators<T> denominators(const Powers<T>& w, int n) {
  return {T(1) - w.A[n] - w.B[n], T(1) - w.R1[n] * w.M1[n + 1] - w.R2[n] * w.M2[n + 1],
          T(1) - w.R1[n + 1] * w.M1[n] - w.R2[n + 1] * w.M2[n]};
}

template <class T>
void run_recursion(const Powers<T>& w, int n_max, std::vector<T>& p, std::vector<T>& q,
                   const T& degenerate_below) {
  p.assign(n_max + 1, T(0));
  q.assign(n_max + 1, T(0));
  p[0] = q[0] = T(1);
  if (n_max >= 1) p[1] = q[1] = T(1);
  for (int n = 1; 2 * n <= n_max; ++n) {
    const Level<T> level{w, p, q, n, false};
    const Denominators<T> d = denominators(w, n);
    if (d.even <= degenerate_below || d.p_odd <= degenerate_below || d.q_odd <= degenerate_below)
      throw ComputationError("recursion denominator at level " + std::to_string(n) +
                             " is too close to zero for the working precision");
    p[2 * n] = level.p_even() / d.even;
    q[2 * n] = level.q_even() / d.even;
    if (2 * n + 1 > n_max) break;
    p[2 * n + 1] = level.p_odd() / d.p_odd;
    q[2 * n + 1] = level.q_odd() / d.q_odd;
  }
}

// Mirrors the recursion on relative error bounds (in units of the roundoff):
// every summand is a product of positive factors, so relative errors add
// along products and the largest summand bound dominates a positive sum.
std::vector<double> error_units(const RealParams& v, int n_max, double param_units) {
  const double r1 = static_cast<double>(v.r1), r2 = static_cast<double>(v.r2);
  const double m1 = static_cast<double>(v.m1), m2 = static_cast<double>(v.m2);
  const double g = 1.0 - r1 - r2;
  const double g_units = g > 1e-300 ? 4.0 * (r1 + r2) / g + param_units : 0.0;
  std::vector<double> c(n_max + 1, 0.0);
  for (int n = 1; 2 * n <= n_max; ++n) {
    const double pow_units = param_units * (2 * n + 2) + 2 * n + 2;
    auto entry = [&](int hi, double x) {
      double worst = 0.0;
      for (int a = 0; a <= hi; ++a) worst = std::max(worst, c[a] + c[hi - a]);
      const double sum = worst + 2 * pow_units + g_units + 3 * n + 8;
      const double pref = pow_units * x / std::max(1e-300, 1.0 - x) + 2;
      return sum + pref + 1;
    };
    const double xe = std::pow(r1 * m1, n) + std::pow(r2 * m2, n);
    const double e = entry(2 * n, xe);
    c[2 * n] = e;
    if (2 * n + 1 > n_max) break;
    const double xo = std::max(std::pow(r1, n) * std::pow(m1, n + 1) + std::pow(r2, n) * std::pow(m2, n + 1),
                               std::pow(r1, n + 1) * std::pow(m1, n) + std::pow(r2, n + 1) * std::pow(m2, n));
    c[2 * n + 1] = entry(2 * n + 1, xo);
  }
  return c;
}

}  // namespace

namespace {

std::mutex cache_mutex;
TableCache table_cache;

std::optional<PQTable> cache_load(const MeasureParams& params, Backend backend, int n_max,
                                  unsigned digits) {
  std::lock_guard<std::mutex> lock(cache_mutex);
  if (!table_cache.load) return std::nullopt;
  return table_cache.load(params, backend, n_max, digits);
}

PQTable cache_save(PQTable t) {
  std::lock_guard<std::mutex> lock(cache_mutex);
  if (table_cache.save) table_cache.save(t);
  return t;
}

}  // namespace

void set_table_cache(TableCache cache) {
  std::lock_guard<std::mutex> lock(cache_mutex);
  table_cache = std::move(cache);
}

PQTable compute_pq_real(const MeasureParams& params, int n_max, unsigned digits) {
  if (n_max < 1) throw ValidationError("n_max must be at least 1");
  if (auto cached = cache_load(params, Backend::high_precision_real, n_max, digits)) return *cached;
  PQTable t;
  t.params = params;
  t.backend = Backend::high_precision_real;
  t.n_max = n_max;
  t.digits = digits;
  PrecisionScope scope(digits);
  const RealParams v = params.real();
  const Powers<Real> w(v.r1, v.r2, v.m1, v.m2, n_max / 2 + 2);
  const Real degenerate = pow10(-params.working_digits() / 2);
  run_recursion(w, n_max, t.p_real, t.q_real, degenerate);
  t.err_units = error_units(v, n_max, params.natural_weights() ? 64.0 : 1.0);
  return cache_save(std::move(t));
}

PQTable compute_pq(const MeasureParams& params, int n_max) {
  if (n_max < 1) throw ValidationError("n_max must be at least 1");
  if (!params.is_exact())
    return compute_pq_real(params, n_max, static_cast<unsigned>(params.working_digits() + guard_digits));
  if (auto cached = cache_load(params, Backend::exact_rational, n_max, 0)) return *cached;
  PQTable t;
  t.params = params;
  t.backend = Backend::exact_rational;
  t.n_max = n_max;
  const auto& [r1, r2, m1, m2] = params.rationals();
  const Powers<Rational> w(r1, r2, m1, m2, n_max / 2 + 2);
  run_recursion(w, n_max, t.p_exact, t.q_exact, Rational(0));
  t.err_units.assign(n_max + 1, 0.0);
  return cache_save(std::move(t));
}

PQTable to_real_table(const PQTable& table, unsigned digits) {
  if (!table.is_exact()) {
    if (table.digits >= digits) return table;
    throw ComputationError("cannot raise the precision of a real table; recompute it");
  }
  PQTable t;
  t.params = table.params;
  t.backend = Backend::high_precision_real;
  t.n_max = table.n_max;
  t.digits = digits;
  PrecisionScope scope(digits);
  t.p_real.reserve(table.n_max + 1);
  t.q_real.reserve(table.n_max + 1);
  for (int i = 0; i <= table.n_max; ++i) {
    t.p_real.push_back(to_real(table.p_exact[i]));
    t.q_real.push_back(to_real(table.q_exact[i]));
  }
  t.err_units.assign(table.n_max + 1, 1.0);
  return t;
}

namespace {

template <class T>
T shortcut(const std::vector<T>& p, const std::vector<T>& q, int n) {
  T s(0);
  for (int k = 1; k <= 2 * n - 1; ++k) {
    const T term = p[k] * q[2 * n - k];
    if (k % 2 == 1) s += term; else s -= term;
  }
  return s / T(2);
}

template <class T>
T cross(const std::vector<T>& p, const std::vector<T>& q, int n) {
  T s(0);
  for (int j = 0; j <= 2 * n; ++j) {
    const T term = q[j] * p[2 * n - j];
    if (j % 2 == 0) s += term; else s -= term;
  }
  return s;
}

void require_index(const PQTable& t, int idx) {
  if (idx > t.n_max)
    throw TableTooShallow("table ends at index " + std::to_string(t.n_max) + ", need " +
                              std::to_string(idx), idx);
}

}  // namespace

Value symmetric_even_shortcut(const PQTable& table, int n) {
  if (!classify(table.params).is_symmetric)
    throw ValidationError("the even shortcut requires symmetric parameters");
  if (n < 1) throw ValidationError("n must be at least 1");
  require_index(table, 2 * n - 1);
  if (table.is_exact()) return Value::of(shortcut(table.p_exact, table.q_exact, n));
  PrecisionScope scope(table.digits);
  return Value::of(shortcut(table.p_real, table.q_real, n));
}

Value cross_identity_check(const PQTable& table, int n) {
  if (n < 1) throw ValidationError("the cross identity is stated for n >= 1");
  require_index(table, 2 * n);
  if (table.is_exact()) return Value::of(cross(table.p_exact, table.q_exact, n));
  PrecisionScope scope(table.digits);
  return Value::of(cross(table.p_real, table.q_real, n));
}

std::array<Value, 4> binomial_analogue_check(const PQTable& table, int n) {
  if (n < 1) throw ValidationError("n must be at least 1");
  require_index(table, 2 * n + 1);
  auto run = [n](const auto& w, const auto& p, const auto& q) {
    using T = std::decay_t<decltype(p[0])>;
    const Level<T> level{w, p, q, n, true};
    return std::array<T, 4>{level.p_even() - p[2 * n], level.q_even() - q[2 * n],
                            level.p_odd() - p[2 * n + 1], level.q_odd() - q[2 * n + 1]};
  };
  std::array<Value, 4> out;
  if (table.is_exact()) {
    const auto& [r1, r2, m1, m2] = table.params.rationals();
    const Powers<Rational> w(r1, r2, m1, m2, n + 2);
    const auto r = run(w, table.p_exact, table.q_exact);
    for (int i = 0; i < 4; ++i) out[i] = Value::of(r[i]);
    return out;
  }
  PrecisionScope scope(table.digits);
  const RealParams v = table.params.real();
  const Powers<Real> w(v.r1, v.r2, v.m1, v.m2, n + 2);
  const auto r = run(w, table.p_real, table.q_real);
  for (int i = 0; i < 4; ++i) out[i] = Value::of(r[i]);
  return out;
}

std::pair<double, double> quadrature_oracle(const MeasureParams& params, int n, int level) {
  if (level < 1 || level > 24) throw ValidationError("quadrature level must be in [1, 24]");
  if (n < 0) throw ValidationError("n must be non-negative");
  double r1, r2, m1, m2;
  {
    PrecisionScope scope(30);
    const RealParams v = params.real();
    r1 = static_cast<double>(v.r1);
    r2 = static_cast<double>(v.r2);
    m1 = static_cast<double>(v.m1);
    m2 = static_cast<double>(v.m2);
  }
  // Level-L cells S_w([0,1]) in increasing order: each cell is refined into
  // its S1 child followed by its S2 child.
  std::vector<double> lo{0.0}, scale{1.0}, mass{1.0};
  for (int l = 0; l < level; ++l) {
    std::vector<double> nlo, nscale, nmass;
    nlo.reserve(2 * lo.size());
    nscale.reserve(2 * lo.size());
    nmass.reserve(2 * lo.size());
    for (std::size_t i = 0; i < lo.size(); ++i) {
      nlo.push_back(lo[i]);
      nscale.push_back(scale[i] * r1);
      nmass.push_back(mass[i] * m1);
      nlo.push_back(lo[i] + scale[i] * (1.0 - r2));
      nscale.push_back(scale[i] * r2);
      nmass.push_back(mass[i] * m2);
    }
    lo.swap(nlo);
    scale.swap(nscale);
    mass.swap(nmass);
  }
  // Grid: the endpoints S_w(0), S_w(1) of every cell. The atom of mass m_w
  // sits at S_w(1/2) between them, so a mu-integral is constant across each
  // gap and jumps inside its cell; the integrand at the atom is the mean of
  // its values at the two cell endpoints.
  const std::size_t K = lo.size();
  std::vector<double> x(2 * K);
  for (std::size_t k = 0; k < K; ++k) {
    x[2 * k] = lo[k];
    x[2 * k + 1] = lo[k] + scale[k];
  }
  auto mu_integral = [&](const std::vector<double>& f) {
    std::vector<double> F(f.size(), 0.0);
    double acc = 0.0;
    for (std::size_t k = 0; k < K; ++k) {
      F[2 * k] = acc;
      acc += mass[k] * 0.5 * (f[2 * k] + f[2 * k + 1]);
      F[2 * k + 1] = acc;
    }
    return F;
  };
  auto lebesgue_integral = [&](const std::vector<double>& f) {
    std::vector<double> F(f.size(), 0.0);
    for (std::size_t i = 1; i < f.size(); ++i) F[i] = F[i - 1] + 0.5 * (f[i] + f[i - 1]) * (x[i] - x[i - 1]);
    return F;
  };
  std::vector<double> p(2 * K, 1.0), q(2 * K, 1.0);
  for (int k = 1; k <= n; ++k) {
    if (k % 2 == 1) {
      p = mu_integral(p);
      q = lebesgue_integral(q);
    } else {
      p = lebesgue_integral(p);
      q = mu_integral(q);
    }
  }
  return {p.back(), q.back()};
}

}  // namespace mgl
