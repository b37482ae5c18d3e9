#include "mgl/fourier.hpp"

#include "mgl/errors.hpp"

#include <algorithm>

namespace mgl {

std::string to_string(const FourierTarget& target) {
  switch (target.kind) {
    case FourierTargetKind::identity_x: return "x";
    case FourierTargetKind::constant_one: return "1";
    case FourierTargetKind::dirichlet_eigenfunction: return "fD" + std::to_string(target.index);
  }
  return "?";
}

FourierTarget parse_fourier_target(const std::string& text) {
  FourierTarget t;
  if (text == "x") return t;
  if (text == "1") {
    t.kind = FourierTargetKind::constant_one;
    return t;
  }
  if (text.size() > 2 && text.compare(0, 2, "fD") == 0 &&
      std::all_of(text.begin() + 2, text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    t.kind = FourierTargetKind::dirichlet_eigenfunction;
    t.index = std::stoi(text.substr(2));
    if (t.index >= 1) return t;
  }
  throw ValidationError("unknown Fourier target '" + text + "' (expected x, 1 or fD<j> with j >= 1)");
}

namespace {

Ball lambda_ball(const EigenvalueRecord& r) {
  const Real lo = to_current(r.lo);
  const Real hi = to_current(r.hi);
  return Ball((lo + hi) / 2, (hi - lo) / 2 + abs(hi) * unit_roundoff() * 2);
}

Ball norm_ball(const CertifiedValue& n) { return Ball(to_current(n.value), to_current(n.tail_bound)); }

Ball table_ball(const PQTable& table, char which, int n) {
  const Real v = which == 'p' ? table.p(n) : table.q(n);
  return Ball(v, abs(v) * table.rel_error(n));
}

int alternating(int k) { return k % 2 == 0 ? 1 : -1; }

bool contains(const Ball& b, const Real& x) { return (b - Ball(x)).contains_zero(); }

void require_symmetric(const MeasureParams& params) {
  if (!classify(params).is_symmetric)
    throw ValidationError("Fourier expansions need a symmetric measure (r1 = r2 and m1 = m2)");
}

void check_basis(BoundaryCondition basis) {
  if (basis != BoundaryCondition::N && basis != BoundaryCondition::D)
    throw ValidationError("the Fourier basis must be N or D");
}

// Fills the coefficients of `e` from its records.
void fill_coefficients(FourierExpansion& e, const TrigEngine& engine,
                       std::vector<EigenvalueRecord> records) {
  PrecisionScope scope(engine.working_digits());
  const bool neumann = e.basis == BoundaryCondition::N;
  const bool eigen_target = e.target.kind == FourierTargetKind::dirichlet_eigenfunction;
  const MeasureClass cls = classify(e.params);

  Ball w, lambda_d, cos_w;
  if (eigen_target) {
    const auto d = find_eigenvalues(BoundaryCondition::D, e.params, e.target.index, e.digits);
    e.target_record = d[e.target.index - 1];
    e.target_norm = l2_norm(*e.target_record, engine);
    w = z_enclosure(*e.target_record);
    lambda_d = lambda_ball(*e.target_record);
    cos_w = engine.eval_ball(w).cosD.v;
    if (!contains(cos_w, Real(alternating(e.target.index)))) e.sign_rule_violation = 0;
  }
  const PQTable& table = engine.table();

  for (const EigenvalueRecord& r : records) {
    FourierTerm t;
    t.record = r;
    t.norm = l2_norm(r, engine);
    const int k = r.index;
    const Ball n = norm_ball(t.norm);
    if (k == 0) {
      t.boundary_cos = Ball(Real(1));
      t.sign_rule = true;
      switch (e.target.kind) {
        case FourierTargetKind::identity_x: t.coefficient = table_ball(table, 'q', 2); break;
        case FourierTargetKind::constant_one: t.coefficient = Ball(Real(1)); break;
        case FourierTargetKind::dirichlet_eigenfunction:
          t.coefficient = (Ball(Real(1)) - cos_w) / w;
          break;
      }
    } else {
      const Ball z = z_enclosure(r);
      const Ball lambda = lambda_ball(r);
      const TrigQuad q = engine.eval_ball(z);
      t.boundary_cos = neumann ? q.cosN.v : q.cosD.v;
      t.sign_rule = contains(t.boundary_cos, Real(alternating(k)));
      const Ball one(Real(1));
      switch (e.target.kind) {
        case FourierTargetKind::identity_x:
          t.coefficient = neumann ? (q.cosN.v - one) / (n * lambda) : -q.cosD.v / (n * z);
          break;
        case FourierTargetKind::constant_one:
          t.coefficient = neumann ? Ball(Real(0)) : (one - q.cosD.v) / (n * z);
          break;
        case FourierTargetKind::dirichlet_eigenfunction:
          if (!neumann) {
            t.coefficient = k == e.target.index ? n : Ball(Real(0));
          } else if (cls.dirichlet_equals_neumann && k == e.target.index) {
            // lambda_{N,j} = lambda_{D,j}: the limit of the quotient as
            // lambda_{N,k} tends to lambda_{D,j}.
            t.coefficient = q.cosN.d * cos_w / (Ball(Real(2)) * n);
          } else {
            const Ball diff = lambda_d - lambda;
            if (diff.contains_zero())
              throw ComputationError("Neumann and Dirichlet eigenvalue enclosures overlap at k = " +
                                     std::to_string(k));
            t.coefficient = w * (one - q.cosN.v * cos_w) / (diff * n);
          }
          break;
      }
    }
    t.vanishes = t.coefficient.contains_zero();
    if (!t.sign_rule && e.sign_rule_violation < 0) e.sign_rule_violation = k;
    e.terms.push_back(std::move(t));
  }
}

FourierExpansion make(const FourierTarget& target, BoundaryCondition basis, const MeasureParams& params,
                      int digits) {
  require_symmetric(params);
  check_basis(basis);
  if (digits < 5) throw ValidationError("Fourier expansions need at least 5 digits");
  FourierExpansion e;
  e.params = params;
  e.basis = basis;
  e.target = target;
  e.digits = digits;
  return e;
}

unsigned engine_digits(int digits) { return static_cast<unsigned>(digits + 10); }

}  // namespace

FourierExpansion expand(const FourierTarget& target, BoundaryCondition basis,
                        const MeasureParams& params, int count, int digits) {
  FourierExpansion e = make(target, basis, params, digits);
  if (count < 1) throw ValidationError("the coefficient count must be at least 1");
  std::vector<EigenvalueRecord> records;
  if (basis == BoundaryCondition::N) {
    records = find_eigenvalues(basis, params, count - 1, digits);
  } else {
    records = find_eigenvalues(basis, params, count, digits);
  }
  const TrigEngine engine(params, engine_digits(digits));
  fill_coefficients(e, engine, std::move(records));
  return e;
}

FourierExpansion expand_below(const FourierTarget& target, BoundaryCondition basis,
                              const MeasureParams& params, double lambda_max, int digits) {
  FourierExpansion e = make(target, basis, params, digits);
  std::vector<EigenvalueRecord> records = find_eigenvalues_below(basis, params, lambda_max, digits);
  const TrigEngine engine(params, engine_digits(digits));
  fill_coefficients(e, engine, std::move(records));
  return e;
}

ParsevalSum parseval(const FourierExpansion& e) {
  const TrigEngine engine(e.params, engine_digits(e.digits));
  PrecisionScope scope(engine.working_digits());
  const PQTable& table = engine.table();
  const bool neumann = e.basis == BoundaryCondition::N;
  ParsevalSum s;
  Ball scale(Real(1));
  Ball target;
  switch (e.target.kind) {
    case FourierTargetKind::identity_x:
      if (neumann) {
        s.identity = "sum 1/(n_N,k^2 lambda_N,k^2) = (p_2 q_2 - q_3)/4";
        scale = Ball(Real(4));
        target = (table_ball(table, 'p', 2) * table_ball(table, 'q', 2) - table_ball(table, 'q', 3)) /
                 Ball(Real(4));
      } else {
        s.identity = "sum 1/(n_D,k^2 lambda_D,k) = q_2 - q_3";
        target = table_ball(table, 'q', 2) - table_ball(table, 'q', 3);
      }
      break;
    case FourierTargetKind::constant_one:
      if (neumann) throw ValidationError("no Parseval identity for 1 in the N basis");
      s.identity = "sum 1/(n_D,k^2 lambda_D,k) over odd k = 1/4";
      scale = Ball(Real(4));
      target = Ball(Real(1) / 4);
      break;
    case FourierTargetKind::dirichlet_eigenfunction: {
      if (!neumann || e.target.index % 2 == 0)
        throw ValidationError("the eigenfunction Parseval identity needs f_D,j with odd j in the N basis");
      s.identity = "sum 1/((lambda_N,k - lambda_D,j)^2 n_N,k^2) = n_D,j^2/(4 lambda_D,j) - 1/lambda_D,j^2";
      const Ball lambda_d = lambda_ball(*e.target_record);
      const Ball n = norm_ball(e.target_norm);
      scale = Ball(Real(4)) * lambda_d;
      target = n * n / scale - Ball(Real(1)) / (lambda_d * lambda_d);
      break;
    }
  }
  Ball sum(Real(0));
  for (const FourierTerm& t : e.terms) {
    if (t.record.index == 0) continue;
    const Ball a = t.coefficient;
    const Ball summand = a * a / scale;
    if (summand.mid + summand.radius() < 0) s.nondecreasing = false;
    sum = sum + summand;
    ++s.terms;
  }
  s.partial = sum.mid;
  s.partial_radius = sum.radius();
  s.target = target.mid;
  s.target_radius = target.radius();
  s.gap = s.target - s.partial;
  s.within_target = s.partial - s.target <= s.partial_radius + s.target_radius;
  return s;
}

std::vector<ParsevalSum> parseval_sums(const MeasureParams& params, double lambda_max, int digits,
                                       int eigen_index) {
  FourierTarget eigen;
  eigen.kind = FourierTargetKind::dirichlet_eigenfunction;
  eigen.index = eigen_index;
  FourierTarget one;
  one.kind = FourierTargetKind::constant_one;
  std::vector<ParsevalSum> out;
  out.push_back(parseval(expand_below(FourierTarget{}, BoundaryCondition::N, params, lambda_max, digits)));
  out.push_back(parseval(expand_below(FourierTarget{}, BoundaryCondition::D, params, lambda_max, digits)));
  out.push_back(parseval(expand_below(one, BoundaryCondition::D, params, lambda_max, digits)));
  out.push_back(parseval(expand_below(eigen, BoundaryCondition::N, params, lambda_max, digits)));
  return out;
}

namespace {

// f at the corner points of the depth.
std::vector<Real> target_values(const FourierExpansion& e, const TrigEngine& engine, int depth,
                                const std::vector<Real>& xs) {
  switch (e.target.kind) {
    case FourierTargetKind::identity_x: return xs;
    case FourierTargetKind::constant_one: return std::vector<Real>(xs.size(), Real(1));
    case FourierTargetKind::dirichlet_eigenfunction: {
      const EigenfunctionSample s = sample(*e.target_record, engine, depth);
      std::vector<Real> v;
      v.reserve(s.values.size());
      for (const Ball& b : s.values) v.push_back(b.mid);
      return v;
    }
  }
  return {};
}

}  // namespace

Reconstruction reconstruct(const FourierExpansion& e, int depth, int terms) {
  if (terms < 0) throw ValidationError("the number of terms must be nonnegative");
  if (depth < 0 || depth > max_sample_depth)
    throw ValidationError("depth must lie in 0.." + std::to_string(max_sample_depth));
  const TrigEngine engine(e.params, engine_digits(e.digits));
  PrecisionScope scope(engine.working_digits());
  Reconstruction out;
  out.depth = depth;
  EigenvalueRecord zero;
  zero.bc = BoundaryCondition::N;
  zero.lambda = 0;
  zero.lo = 0;
  zero.hi = 0;
  out.xs = sample(zero, engine, depth).xs;
  out.target = target_values(e, engine, depth, out.xs);
  out.partial.assign(out.xs.size(), Real(0));
  for (const FourierTerm& t : e.terms) {
    if (static_cast<int>(out.indices.size()) == terms) break;
    if (t.vanishes) continue;
    out.indices.push_back(t.record.index);
    const EigenfunctionSample s = sample(t.record, engine, depth);
    const Real factor = t.coefficient.mid / to_current(t.norm.value);
    for (std::size_t i = 0; i < out.xs.size(); ++i) out.partial[i] += factor * s.values[i].mid;
  }
  if (static_cast<int>(out.indices.size()) < terms)
    throw ValidationError("the expansion has only " + std::to_string(out.indices.size()) +
                          " nonvanishing terms");
  return out;
}

Real quadrature_coefficient(const FourierExpansion& e, int position, int depth) {
  if (position < 0 || position >= e.count()) throw ValidationError("term position out of range");
  if (depth < 0 || depth > max_sample_depth)
    throw ValidationError("depth must lie in 0.." + std::to_string(max_sample_depth));
  const TrigEngine engine(e.params, engine_digits(e.digits));
  PrecisionScope scope(engine.working_digits());
  const FourierTerm& t = e.terms[static_cast<std::size_t>(position)];
  const EigenfunctionSample s = sample(t.record, engine, depth);
  const std::vector<Real> f = target_values(e, engine, depth, s.xs);

  // Cell masses in the order of the corner points (S1 cells first).
  const RealParams p = e.params.real();
  std::vector<Real> mass{Real(1)};
  for (int d = 0; d < depth; ++d) {
    std::vector<Real> next;
    next.reserve(mass.size() * 2);
    for (const Real& m : mass) next.push_back(p.m1 * m);
    for (const Real& m : mass) next.push_back(p.m2 * m);
    mass.swap(next);
  }
  Real sum = 0;
  for (std::size_t c = 0; c < mass.size(); ++c) {
    const std::size_t a = 2 * c;
    const std::size_t b = 2 * c + 1;
    sum += mass[c] * (f[a] * s.values[a].mid + f[b] * s.values[b].mid) / 2;
  }
  return sum / to_current(t.norm.value);
}

}  // namespace mgl
