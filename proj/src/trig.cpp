#include "mgl/trig.hpp"

#include "mgl/errors.hpp"

#include <algorithm>
#include <cmath>

namespace mgl {

std::string to_string(TrigKind k) {
  switch (k) {
    case TrigKind::sinN: return "sinN";
    case TrigKind::sinD: return "sinD";
    case TrigKind::cosN: return "cosN";
    case TrigKind::cosD: return "cosD";
  }
  return "?";
}

const Jet& TrigQuad::get(TrigKind k) const {
  switch (k) {
    case TrigKind::sinN: return sinN;
    case TrigKind::sinD: return sinD;
    case TrigKind::cosN: return cosN;
    case TrigKind::cosD: return cosD;
  }
  return sinN;
}

namespace {

constexpr double ln10 = 2.302585092994046;
constexpr int kind_count = 4;
constexpr TrigKind kinds[kind_count] = {TrigKind::sinN, TrigKind::sinD, TrigKind::cosN, TrigKind::cosD};

bool is_odd(TrigKind k) { return k == TrigKind::sinN || k == TrigKind::sinD; }

// Table index of the n-th coefficient of a series.
int coef_index(TrigKind k, int n) { return is_odd(k) ? 2 * n + 1 : 2 * n; }

Real coef(const PQTable& t, TrigKind k, int n) {
  const int i = coef_index(k, n);
  return (k == TrigKind::sinN || k == TrigKind::cosN) ? t.p(i) : t.q(i);
}

// Constant c of the factorial bound |coefficient n| <= c^n / n!.
Real lemma_constant(const PQTable& t, TrigKind k) {
  return (k == TrigKind::sinN || k == TrigKind::cosD) ? t.q(2) : t.p(2);
}

double log_of(const Real& x) { return static_cast<double>(log(x)); }

// log of the tail bound after N terms of sum_n c^n h^{2n+e} / n!, with the
// geometric closure when it applies and the exp(c h^2) closure otherwise.
double log_tail(double log_c, double log_h, int e, int N) {
  const double log_x = log_c + 2 * log_h;
  const double log_first = e * log_h + N * log_x - std::lgamma(N + 1.0);
  const double rho = std::exp(log_x) / (N + 1.0);
  const double closure_exp = std::exp(log_x);
  const double closure = rho < 1.0 ? std::min(-std::log1p(-rho), closure_exp) : closure_exp;
  return log_first + closure;
}

// log of the derivative tail bound sum_{n>=N} (2n+e) c^n h^{2n+e-1} / n!.
double log_tail_derivative(double log_c, double log_h, int e, int N) {
  const double log_x = log_c + 2 * log_h;
  const int k = 2 * N + e;
  const double log_first = std::log(static_cast<double>(std::max(k, 1))) + (k - 1) * log_h +
                           N * log_c - std::lgamma(N + 1.0);
  const double rho = std::exp(log_x) / (N + 1.0) * (k + 2.0) / std::max(k, 1);
  if (rho >= 0.5) return std::numeric_limits<double>::infinity();
  return log_first - std::log1p(-rho);
}

// log of the second-derivative tail bound
// sum_{n>=N} k (k-1) c^n h^{k-2} / n! with k = 2n+e, for N >= 2.
double log_tail_second(double log_c, double log_h, int e, int N) {
  const double log_x = log_c + 2 * log_h;
  const double k = 2.0 * N + e;
  const double log_first = std::log(k * (k - 1)) + (k - 2) * log_h + N * log_c - std::lgamma(N + 1.0);
  const double rho = std::exp(log_x) / (N + 1.0) * (k + 2) * (k + 1) / (k * (k - 1));
  if (rho >= 0.5) return std::numeric_limits<double>::infinity();
  return log_first - std::log1p(-rho);
}

unsigned digits_for(const Real& tol, int terms) {
  const double d = -static_cast<double>(log10(tol));
  return static_cast<unsigned>(std::max(20.0, std::ceil(d) + std::ceil(std::log10(terms + 1.0)) + 10));
}

Real exp_real(double log_value) {
  Real r = log_value;
  return exp(r);
}

}  // namespace

int lemma_degree(const PQTable& table, TrigKind kind, const Real& z, const Real& tol, int max_terms) {
  if (z == 0) return 1;
  PrecisionScope scope(30);
  const double log_c = log_of(lemma_constant(table, kind));
  const double log_h = log_of(abs(to_current(z)));
  const double target = log_of(to_current(tol)) - std::log(2.0);
  const int e = is_odd(kind) ? 1 : 0;
  for (int N = 1; N <= max_terms; ++N)
    if (log_tail(log_c, log_h, e, N) < target) return N;
  return -1;
}

CertifiedValue eval(const TrigSeries& series, const Real& z, const Real& tol) {
  const PQTable& t = *series.table;
  const TrigKind k = series.kind;
  const int N = series.degree;
  if (N < 1) throw ValidationError("series degree must be at least 1");
  if (coef_index(k, N - 1) > t.n_max)
    throw TableTooShallow("table of depth " + std::to_string(t.n_max) + " cannot hold " +
                              std::to_string(N) + " terms of " + to_string(k),
                          N);
  const unsigned digits = t.is_exact() ? digits_for(tol, N) : t.digits;
  PrecisionScope scope(digits);
  const Real zz = to_current(z);
  const Real tl = to_current(tol);
  const int e = is_odd(k) ? 1 : 0;

  CertifiedValue out;
  if (zz == 0) {
    out.value = e ? Real(0) : Real(1);
    out.tail_bound = 0;
    return out;
  }

  Real tail = 0;
  {
    PrecisionScope low(30);
    const double lt = log_tail(log_of(lemma_constant(t, k)), log_of(abs(zz)), e, N);
    tail = exp_real(lt);
  }
  if (tail > tl / 2) {
    const int need = lemma_degree(t, k, zz, tl);
    throw TableTooShallow(to_string(k) + " needs " + std::to_string(need) + " terms at this argument",
                          need);
  }

  const Real x = zz * zz;
  const Real xneg = -x;
  Real v = 0;
  Real mag = 0;
  Real E = 0;
  for (int n = N - 1; n >= 0; --n) {
    const Real c = coef(t, k, n);
    v = v * xneg + c;
    mag = mag * x + c;
    E = std::max(E, t.rel_error(coef_index(k, n)));
  }
  if (e) {
    v *= zz;
    mag *= abs(zz);
  }
  const Real u = unit_roundoff();
  out.value = v;
  out.tail_bound = tail + (E + (4 * N + 8) * u) * mag;
  return out;
}

CertifiedValue eval_exp(const PQTable& t, const Real& z, ExpVariant variant, const Real& tol) {
  const bool lm = variant == ExpVariant::lambda_mu;
  const int K = t.n_max;  // highest usable index
  const unsigned digits = t.is_exact() ? digits_for(tol, K) : t.digits;
  PrecisionScope scope(digits);
  const Real zz = to_current(z);
  CertifiedValue out;
  if (zz == 0) {
    out.value = 1;
    out.tail_bound = 0;
    return out;
  }
  // Even and odd parts are bounded by c^n h^{2n} / n! and c^n h^{2n+1} / n!.
  const Real c = lm ? t.p(2) : t.q(2);
  const int N = (K + 1) / 2;  // full pairs of terms available
  Real tail;
  {
    PrecisionScope low(30);
    const double lc = log_of(c), lh = log_of(abs(zz));
    const double lt0 = log_tail(lc, lh, 0, N);
    const double lt1 = log_tail(lc, lh, 1, N);
    tail = exp_real(lt0) + exp_real(lt1);
  }
  if (tail > to_current(tol) / 2) throw TableTooShallow("exponential series needs a deeper table", K * 2);
  Real v = 0, mag = 0, E = 0;
  const Real h = abs(zz);
  for (int k = 2 * N - 1; k >= 0; --k) {
    const Real a = (k % 2 == 0) == lm ? t.p(k) : t.q(k);
    v = v * zz + a;
    mag = mag * h + a;
    E = std::max(E, t.rel_error(k));
  }
  out.value = v;
  out.tail_bound = tail + (E + (4 * K + 8) * unit_roundoff()) * mag;
  return out;
}

std::pair<CertifiedValue, CertifiedValue> eval_exp_imaginary(const PQTable& t, const Real& tt,
                                                             ExpVariant variant, const Real& tol) {
  const bool lm = variant == ExpVariant::lambda_mu;
  const int N = (t.n_max + 1) / 2;
  const unsigned digits = t.is_exact() ? digits_for(tol, 2 * N) : t.digits;
  PrecisionScope scope(digits);
  const Real z = to_current(tt);
  const Real c = lm ? t.p(2) : t.q(2);
  Real tail_re = 0, tail_im = 0;
  if (z != 0) {
    PrecisionScope low(30);
    const double lc = log_of(c), lh = log_of(abs(z));
    tail_re = exp_real(log_tail(lc, lh, 0, N));
    tail_im = exp_real(log_tail(lc, lh, 1, N));
  }
  if (std::max(tail_re, tail_im) > to_current(tol) / 2)
    throw TableTooShallow("exponential series needs a deeper table", 4 * N);
  // (i t)^k cycles through 1, i, -1, -i: even powers feed the real part and
  // odd powers the imaginary part with alternating signs.
  const Real x = z * z;
  Real re = 0, im = 0, mre = 0, mim = 0, E = 0;
  for (int n = N - 1; n >= 0; --n) {
    const Real ae = lm ? t.p(2 * n) : t.q(2 * n);
    const Real ao = lm ? t.q(2 * n + 1) : t.p(2 * n + 1);
    re = -re * x + ae;
    im = -im * x + ao;
    mre = mre * x + ae;
    mim = mim * x + ao;
    E = std::max({E, t.rel_error(2 * n), t.rel_error(2 * n + 1)});
  }
  im *= z;
  mim *= abs(z);
  const Real u = unit_roundoff();
  CertifiedValue r{re, tail_re + (E + (4 * N + 8) * u) * mre};
  CertifiedValue i{im, tail_im + (E + (4 * N + 8) * u) * mim};
  return {r, i};
}

// ---------------------------------------------------------------------------
// DirectTrig

DirectTrig::DirectTrig(const MeasureParams& params, const Real& z_max, unsigned digits) {
  PQTable probe = compute_pq(params, 3);
  Real c;
  double zmax_d;
  {
    PrecisionScope low(30);
    c = std::max(probe.p(2), probe.q(2));
    zmax_d = static_cast<double>(to_current(z_max));
  }
  // Alternating sums lose up to log10 of the sum of absolute terms, which
  // the factorial bound caps at exp(c z^2).
  const double lost = static_cast<double>(c) * zmax_d * zmax_d / ln10;
  const unsigned work = digits + static_cast<unsigned>(std::ceil(lost)) + 15;
  {
    PrecisionScope scope(work);
    tol_ = pow10(-static_cast<int>(digits));
  }
  int N = 1;
  {
    PrecisionScope low(30);
    const double lc = std::log(static_cast<double>(c));
    const double lh = std::log(std::max(zmax_d, 1e-300));
    const double target = static_cast<double>(log(to_current(tol_))) - std::log(2.0);
    while (std::max(log_tail(lc, lh, 1, N), log_tail(lc, lh, 0, N)) >= target) ++N;
  }
  table_ = compute_pq_real(params, 2 * N + 2, work);
}

CertifiedValue DirectTrig::eval(TrigKind kind, const Real& z) const {
  const int N = std::max(1, lemma_degree(table_, kind, z, tol_));
  return mgl::eval(TrigSeries{kind, &table_, N}, z, tol_);
}

// ---------------------------------------------------------------------------
// TrigEngine

namespace {

// Arguments up to this size are summed directly.
constexpr double base_radius = 2.0;

}  // namespace

struct TrigEngine::Constants {
  Ball a1, a2;            // sqrt(r_i m_i)
  Ball K1, K2, K12;       // sqrt(m1/r1), sqrt(m2/r2), sqrt(m1 m2 / (r1 r2))
  Ball L1, L2;            // sqrt(r1/m1), sqrt(r2/m2)
  Ball C1, C2;            // sqrt(r2 m1 / (r1 m2)), sqrt(r1 m2 / (r2 m1))
  Ball G, G1, G2;         // g, g sqrt(m1/r1), g sqrt(m2/r2)
  double log_c = 0;       // log max(p_2, q_2)
};

TrigEngine::TrigEngine(const MeasureParams& params, unsigned digits)
    : params_(params), digits_(digits), work_(digits + 15), k_(std::make_shared<Constants>()) {
  PrecisionScope scope(work_);
  const RealParams v = params.real();
  // Parameters carry one rounding (several for derived weights).
  const Real u = unit_roundoff() * (params.natural_weights() ? 64 : 4);
  auto ball = [&u](const Real& x) { return Ball(x, abs(x) * u); };
  Constants& k = *k_;
  k.a1 = ball(sqrt(v.r1 * v.m1));
  k.a2 = ball(sqrt(v.r2 * v.m2));
  k.K1 = ball(sqrt(v.m1 / v.r1));
  k.K2 = ball(sqrt(v.m2 / v.r2));
  k.K12 = ball(sqrt(v.m1 * v.m2 / (v.r1 * v.r2)));
  k.L1 = ball(sqrt(v.r1 / v.m1));
  k.L2 = ball(sqrt(v.r2 / v.m2));
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
  equal_scales_ = k.a1.mid == k.a2.mid && k.a1.radius() == k.a2.radius();
  ensure_terms(32);
  {
    PrecisionScope low(30);
    k.log_c = static_cast<double>(log(std::max(table_->p(2), table_->q(2))));
  }
}

TrigEngine TrigEngine::with_digits(unsigned digits) const { return TrigEngine(params_, digits); }

const PQTable& TrigEngine::table() const { return *table_; }

void TrigEngine::ensure_terms(int terms) const {
  const int need = 2 * terms + 2;
  if (table_ && table_->n_max >= need) return;
  const int n_max = std::max(need, table_ ? 2 * table_->n_max : need);
  table_ = std::make_shared<PQTable>(compute_pq_real(params_, n_max, work_));
  {
    PrecisionScope scope(work_);
    max_rel_err_.assign(n_max + 1, Real(0));
    for (int i = 0; i <= n_max; ++i)
      max_rel_err_[i] = std::max(i > 0 ? max_rel_err_[i - 1] : Real(0), table_->rel_error(i));
    for (int kk = 0; kk < kind_count; ++kk) {
      coef_[kk].resize(n_max / 2);
      for (int n = 0; n < n_max / 2; ++n) coef_[kk][n] = coef(*table_, kinds[kk], n);
    }
  }
  PrecisionScope low(30);
  for (int kk = 0; kk < kind_count; ++kk) {
    auto& a = coef_abs_[kk];
    a.assign(n_max / 2, 0.0);
    for (int n = 0; n < n_max / 2; ++n) {
      const double d = static_cast<double>(coef(*table_, kinds[kk], n));
      // Entries below the double range are kept as the smallest normal
      // number so that magnitude bounds never drop a term.
      a[n] = std::max(d, std::numeric_limits<double>::min());
    }
  }
}

TrigQuad TrigEngine::base(const Ball& s) const {
  const Real u = unit_roundoff();
  TrigQuad out;
  if (s.mid == 0 && s.radius() == 0) {
    out.sinN = {Ball(Real(0)), Ball(Real(1)), Ball(Real(0))};
    out.sinD = {Ball(Real(0)), Ball(Real(1)), Ball(Real(0))};
    out.cosN = {Ball(Real(1)), Ball(Real(0)), Ball(Real(-2) * table_->p(2))};
    out.cosD = {Ball(Real(1)), Ball(Real(0)), Ball(Real(-2) * table_->q(2))};
    return out;
  }
  const Real hr = abs(s.mid) + s.radius();
  double h, log_h;
  {
    PrecisionScope low(30);
    h = static_cast<double>(to_current(hr));
    log_h = std::log(h);
  }
  const double target = -(work_ + 2.0) * ln10;
  int N = 3;
  while (std::max({log_tail(k_->log_c, log_h, 1, N), log_tail(k_->log_c, log_h, 0, N),
                   log_tail_derivative(k_->log_c, log_h, 1, N),
                   log_tail_derivative(k_->log_c, log_h, 0, N),
                   log_tail_second(k_->log_c, log_h, 1, N),
                   log_tail_second(k_->log_c, log_h, 0, N)}) >= target)
    ++N;
  ensure_terms(N);

  const Real err_rel = max_rel_err_[2 * N + 1] + (4 * N + 12) * u;

  const Real x = s.mid * s.mid;
  const Real xneg = -x;
  for (int kk = 0; kk < kind_count; ++kk) {
    const TrigKind kind = kinds[kk];
    const int e = is_odd(kind) ? 1 : 0;
    // f(s) = sum a_n (-1)^n s^{2n+e}; V = sum a_n (-x)^n; W and U carry the
    // first and second derivative.
    Real V = 0, W = 0, U = 0;
    const std::vector<Real>& cs = coef_[kk];
    for (int n = N - 1; n >= 0; --n) {
      const Real& c = cs[n];
      const int k = 2 * n + e;
      V = V * xneg + c;
      if (e) {
        W = W * xneg + c * k;
      } else if (n >= 1) {
        W = W * xneg + c * k;
      }
      if (n >= 1) U = U * xneg + c * (k * (k - 1));
    }
    Real val, der, der2;
    if (e) {
      val = s.mid * V;
      der = W;
      der2 = -s.mid * U;  // sum_{n>=1} a_n (-1)^n k(k-1) s^{2n-1}
    } else {
      val = V;
      der = -s.mid * W;  // d/ds sum a_n (-1)^n s^{2n} = -s sum 2n a_n (-x)^{n-1}
      der2 = -U;
    }
    // Magnitude bounds of f, f', f'' over the ball, in double.
    double M0 = 0, M1 = 0, M2 = 0, M3 = 0;
    {
      const auto& a = coef_abs_[kk];
      for (int n = N - 1; n >= 0; --n) {
        const double k = 2.0 * n + e;
        const double hk = std::pow(h, k);
        M0 += a[n] * hk;
        if (k >= 1) M1 += a[n] * k * hk / h;
        if (k >= 2) M2 += a[n] * k * (k - 1) * hk / (h * h);
        if (k >= 3) M3 += a[n] * k * (k - 1) * (k - 2) * hk / (h * h * h);
      }
    }
    Real tail_v, tail_d, tail_d2;
    {
      PrecisionScope low(30);
      tail_v = exp_real(log_tail(k_->log_c, log_h, e, N));
      tail_d = exp_real(log_tail_derivative(k_->log_c, log_h, e, N));
      tail_d2 = exp_real(log_tail_second(k_->log_c, log_h, e, N));
    }
    const Real m0 = M0 * 1.0000001, m1 = M1 * 1.0000001, m2 = M2 * 1.0000001, m3 = M3 * 1.0000001;
    Jet j;
    j.v = Ball(val, tail_v + err_rel * m0 + m1 * s.radius());
    j.d = Ball(der, tail_d + err_rel * m1 + m2 * s.radius());
    j.d2 = Ball(der2, tail_d2 + err_rel * m2 + m3 * s.radius());
    switch (kind) {
      case TrigKind::sinN: out.sinN = j; break;
      case TrigKind::sinD: out.sinD = j; break;
      case TrigKind::cosN: out.cosN = j; break;
      case TrigKind::cosD: out.cosD = j; break;
    }
  }
  return out;
}

TrigQuad TrigEngine::descend(const Ball& z, int i, int j,
                             std::map<std::pair<int, int>, TrigQuad>& memo) const {
  if (abs(z.mid) + z.radius() <= base_radius) return base(z);
  const std::pair<int, int> key = equal_scales_ ? std::pair{i + j, 0} : std::pair{i, j};
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const Constants& k = *k_;
  const TrigQuad A0 = descend(k.a1 * z, i + 1, j, memo);
  const TrigQuad B0 = equal_scales_ ? A0 : descend(k.a2 * z, i, j + 1, memo);
  // Chain rule: d/dz f(a z) = a f'(a z).
  auto scaled = [](const Jet& f, const Ball& a) { return Jet{f.v, a * f.d, (a * a) * f.d2}; };
  const Jet sN1 = scaled(A0.sinN, k.a1), sD1 = scaled(A0.sinD, k.a1);
  const Jet cN1 = scaled(A0.cosN, k.a1), cD1 = scaled(A0.cosD, k.a1);
  const Jet sN2 = scaled(B0.sinN, k.a2), sD2 = scaled(B0.sinD, k.a2);
  const Jet cN2 = scaled(B0.cosN, k.a2), cD2 = scaled(B0.cosD, k.a2);
  const Jet Z{z, Ball(Real(1)), Ball(Real(0))};

  TrigQuad r;
  r.sinN = k.K1 * (sN1 * cD2) + k.K2 * (cN1 * sN2) - (k.G * k.K12) * (Z * (sN1 * sN2));
  r.sinD = k.L1 * (sD1 * cN2) + k.L2 * (cD1 * sD2) + k.G * (Z * (cD1 * cN2));
  r.cosN = cN1 * cN2 - k.C1 * (sN1 * sD2) - k.G1 * (Z * (sN1 * cN2));
  r.cosD = cD1 * cD2 - k.C2 * (sD1 * sN2) - k.G2 * (Z * (cD1 * sN2));
  memo.emplace(key, r);
  return r;
}

TrigQuad TrigEngine::eval_all(const Real& z) const {
  PrecisionScope scope(work_);
  const Real zz = to_current(z);
  const bool negative = zz < 0;
  std::map<std::pair<int, int>, TrigQuad> memo;
  TrigQuad q = descend(Ball(abs(zz)), 0, 0, memo);
  if (negative) {
    q.sinN.v = -q.sinN.v;
    q.sinD.v = -q.sinD.v;
    q.sinN.d2 = -q.sinN.d2;
    q.sinD.d2 = -q.sinD.d2;
    q.cosN.d = -q.cosN.d;
    q.cosD.d = -q.cosD.d;
  }
  return q;
}

TrigQuad TrigEngine::eval_ball(const Ball& z) const {
  PrecisionScope scope(work_);
  if (z.mid - z.radius() < 0) throw ValidationError("interval evaluation requires a non-negative ball");
  std::map<std::pair<int, int>, TrigQuad> memo;
  return descend(Ball(to_current(z.mid), to_current(z.radius())), 0, 0, memo);
}

CertifiedValue TrigEngine::eval(TrigKind kind, const Real& z, const Real& tol) const {
  constexpr unsigned ceiling = 4000;
  const TrigEngine* e = this;
  TrigEngine raised = *this;
  while (true) {
    const TrigQuad q = e->eval_all(z);
    const Jet& j = q.get(kind);
    if (j.v.radius() <= tol) {
      CertifiedValue out;
      out.value = j.v.mid;
      out.tail_bound = j.v.radius();
      return out;
    }
    if (e->digits_ >= ceiling)
      throw PrecisionExhausted("cannot reach the requested tolerance below " +
                               std::to_string(ceiling) + " digits");
    raised = e->with_digits(std::min(ceiling, e->digits_ * 3 / 2 + 10));
    e = &raised;
  }
}

// ---------------------------------------------------------------------------

FunctionalResiduals functional_equation_residuals(const DirectTrig& direct, const Real& z) {
  const PQTable& t = direct.table();
  PrecisionScope scope(t.digits);
  const RealParams v = t.params.real();
  const Real zz = to_current(z);
  const Real a1 = sqrt(v.r1 * v.m1), a2 = sqrt(v.r2 * v.m2);
  const Real s1 = a1 * zz, s2 = a2 * zz;
  auto ev = [&direct](TrigKind k, const Real& x) {
    const CertifiedValue c = direct.eval(k, x);
    return Ball(c.value, c.tail_bound);
  };
  // Arguments s1, s2 are rounded once; the induced error is absorbed by the
  // derivative bound M1 * |ds| with |f'| <= sum of absolute terms, which the
  // factorial bound caps at (1 + |x|) exp(c x^2).
  auto arg_err = [&](const Real& x) {
    const Real c = std::max(t.p(2), t.q(2));
    return (1 + abs(x)) * exp(c * x * x) * abs(x) * 4 * unit_roundoff() * (1 + 2 * c * x * x);
  };
  auto at = [&](TrigKind k, const Real& x) {
    Ball b = ev(k, x);
    b.widen(arg_err(x));
    return b;
  };
  const Ball sN = ev(TrigKind::sinN, zz), sD = ev(TrigKind::sinD, zz);
  const Ball cN = ev(TrigKind::cosN, zz), cD = ev(TrigKind::cosD, zz);
  const Ball sN1 = at(TrigKind::sinN, s1), sD1 = at(TrigKind::sinD, s1);
  const Ball cN1 = at(TrigKind::cosN, s1), cD1 = at(TrigKind::cosD, s1);
  const Ball sN2 = at(TrigKind::sinN, s2), sD2 = at(TrigKind::sinD, s2);
  const Ball cN2 = at(TrigKind::cosN, s2), cD2 = at(TrigKind::cosD, s2);

  const Real u = unit_roundoff() * 8;
  auto cst = [&u](const Real& x) { return Ball(x, abs(x) * u); };
  const Real g = 1 - v.r1 - v.r2;
  const Ball G(g, (abs(g) + 2) * u);
  const Ball Z(zz);
  const Ball K1 = cst(sqrt(v.m1 / v.r1)), K2 = cst(sqrt(v.m2 / v.r2));
  const Ball K12 = cst(sqrt(v.m1 * v.m2 / (v.r1 * v.r2)));
  const Ball L1 = cst(sqrt(v.r1 / v.m1)), L2 = cst(sqrt(v.r2 / v.m2));
  const Ball C1 = cst(sqrt(v.r2 * v.m1 / (v.r1 * v.m2))), C2 = cst(sqrt(v.r1 * v.m2 / (v.r2 * v.m1)));

  const std::array<Ball, 4> diff = {
      sN - (K1 * sN1 * cD2 + K2 * cN1 * sN2 - G * K12 * Z * sN1 * sN2),
      sD - (L1 * sD1 * cN2 + L2 * cD1 * sD2 + G * Z * cD1 * cN2),
      cN - (cN1 * cN2 - C1 * sN1 * sD2 - G * K1 * Z * sN1 * cN2),
      cD - (cD1 * cD2 - C2 * sD1 * sN2 - G * K2 * Z * cD1 * sN2)};
  FunctionalResiduals r;
  for (int i = 0; i < 4; ++i) {
    r.residual[i] = diff[i].mid;
    r.bound[i] = diff[i].radius();
  }
  return r;
}

}  // namespace mgl
