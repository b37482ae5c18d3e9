#include "mgl/serialization.hpp"

#include "mgl/errors.hpp"

#include <cmath>

namespace mgl {

std::string full_string(const Real& x) {
  // Enough decimal digits to identify every binary value of x's precision.
  const auto digits = static_cast<std::streamsize>(x.precision() + 5);
  return x.str(digits, std::ios_base::scientific);
}

namespace {

Json reals(const std::vector<Real>& v) {
  Json a = Json::array();
  for (const Real& x : v) a.push_back(full_string(x));
  return a;
}

Json ball(const Ball& b) { return Json{{"mid", full_string(b.mid)}, {"rad", to_sci(b.radius(), 6)}}; }

Json certified(const CertifiedValue& v) {
  return Json{{"value", full_string(v.value)}, {"bound", to_sci(v.tail_bound, 6)}};
}

template <class T>
T field(const Json& doc, const char* name) {
  if (!doc.contains(name)) throw ValidationError(std::string("missing field '") + name + "'");
  try {
    return doc.at(name).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("field '") + name + "': " + e.what());
  }
}

Real real_field(const Json& doc, const char* name) { return parse_real(field<std::string>(doc, name)); }

Backend parse_backend(const std::string& s) {
  if (s == to_string(Backend::exact_rational)) return Backend::exact_rational;
  if (s == to_string(Backend::high_precision_real)) return Backend::high_precision_real;
  throw ValidationError("unknown backend '" + s + "'");
}

}  // namespace

Json to_json(const MeasureParams& params) {
  const MeasureClass c = classify(params);
  Json j{{"r1", params.text()[0]},
         {"r2", params.text()[1]},
         {"m1", params.text()[2]},
         {"m2", params.text()[3]},
         {"canonical", params.canonical()},
         {"backend", to_string(params.backend())},
         {"working_digits", params.working_digits()},
         {"is_lebesgue", c.is_lebesgue},
         {"is_symmetric", c.is_symmetric},
         {"has_renormalization", c.has_renormalization},
         {"dirichlet_equals_neumann", c.dirichlet_equals_neumann}};
  if (c.renorm_factor_exact) {
    j["renorm_factor"] = to_string(*c.renorm_factor_exact);
  } else if (c.renorm_factor) {
    j["renorm_factor"] = to_sci(*c.renorm_factor, 20);
  }
  return j;
}

Json to_json(const PQTable& t) {
  Json p = Json::array();
  Json q = Json::array();
  if (t.is_exact()) {
    for (const Rational& x : t.p_exact) p.push_back(to_string(x));
    for (const Rational& x : t.q_exact) q.push_back(to_string(x));
  } else {
    p = reals(t.p_real);
    q = reals(t.q_real);
  }
  return Json{{"params", t.params.canonical()},
              {"working_digits", t.params.working_digits()},
              {"backend", to_string(t.backend)},
              {"n_max", t.n_max},
              {"digits", t.digits},
              {"p", p},
              {"q", q},
              {"err_units", t.err_units}};
}

PQTable pq_table_from_json(const Json& doc) {
  if (!doc.is_object()) throw ValidationError("a coefficient table must be a JSON object");
  PQTable t;
  t.params = MeasureParams::parse(field<std::string>(doc, "params"),
                                  doc.contains("working_digits") ? field<int>(doc, "working_digits")
                                                                 : MeasureParams::default_digits);
  t.backend = parse_backend(field<std::string>(doc, "backend"));
  t.n_max = field<int>(doc, "n_max");
  t.digits = doc.contains("digits") ? field<unsigned>(doc, "digits") : 0u;
  const auto p = field<std::vector<std::string>>(doc, "p");
  const auto q = field<std::vector<std::string>>(doc, "q");
  const auto size = static_cast<std::size_t>(t.n_max) + 1;
  if (t.n_max < 1 || p.size() != size || q.size() != size)
    throw ValidationError("p and q must hold n_max + 1 entries");
  if (t.is_exact()) {
    if (!t.params.is_exact()) throw ValidationError("exact table for decimal parameters");
    for (std::size_t i = 0; i < size; ++i) {
      Rational a, b;
      if (!parse_fraction(p[i], a) || !parse_fraction(q[i], b))
        throw ValidationError("entry " + std::to_string(i) + " is not a fraction");
      t.p_exact.push_back(a);
      t.q_exact.push_back(b);
    }
    t.err_units.assign(size, 0.0);
  } else {
    if (t.digits == 0) throw ValidationError("a real table needs its precision in 'digits'");
    PrecisionScope scope(t.digits);
    for (std::size_t i = 0; i < size; ++i) {
      t.p_real.push_back(parse_real(p[i]));
      t.q_real.push_back(parse_real(q[i]));
    }
    t.err_units = field<std::vector<double>>(doc, "err_units");
    if (t.err_units.size() != size) throw ValidationError("err_units must hold n_max + 1 entries");
  }
  return t;
}

Json to_json(const EigenvalueRecord& r) {
  return Json{{"bc", to_string(r.bc)},
              {"index", r.index},
              {"lambda", to_sig(r.lambda, std::max(r.digits, 1))},
              {"lambda_full", full_string(r.lambda)},
              {"lo", full_string(r.lo)},
              {"hi", full_string(r.hi)},
              {"precision", r.lo.precision()},
              {"digits", r.digits},
              {"provenance", to_string(r.provenance)},
              {"degree_used", r.degree_used}};
}

EigenvalueRecord eigenvalue_record_from_json(const Json& doc) {
  EigenvalueRecord r;
  r.bc = parse_boundary_condition(field<std::string>(doc, "bc"));
  r.index = field<int>(doc, "index");
  const unsigned precision =
      doc.contains("precision") ? field<unsigned>(doc, "precision") : current_digits();
  PrecisionScope scope(std::max(precision, 10u));
  r.lambda = doc.contains("lambda_full") ? real_field(doc, "lambda_full") : real_field(doc, "lambda");
  r.lo = real_field(doc, "lo");
  r.hi = real_field(doc, "hi");
  r.digits = field<int>(doc, "digits");
  r.degree_used = doc.contains("degree_used") ? field<int>(doc, "degree_used") : 0;
  const std::string prov = doc.contains("provenance") ? field<std::string>(doc, "provenance") : "root";
  if (prov == "exact") {
    r.provenance.kind = Provenance::Kind::synthetic;
  } else if (prov.rfind("renormalized:", 0) == 0) {
    r.provenance.kind = Provenance::Kind::renormalized;
    r.provenance.source_index = std::stoi(prov.substr(13));
  } else if (prov != "root") {
    throw ValidationError("unknown provenance '" + prov + "'");
  }
  if (!(r.lo <= r.hi)) throw ValidationError("eigenvalue enclosure with lo > hi");
  return r;
}

Json to_json(const EigenfunctionSample& s) {
  Json values = Json::array();
  for (const Ball& b : s.values) values.push_back(ball(b));
  return Json{{"record", to_json(s.record)},
              {"family", to_string(s.family)},
              {"depth", s.depth},
              {"xs", reals(s.xs)},
              {"values", values}};
}

Json to_json(const CheckEntry& e) {
  return Json{{"name", e.name},
              {"inputs", e.inputs},
              {"residual", to_sci(e.residual, 6)},
              {"bound", to_sci(e.bound, 6)},
              {"exact", e.exact},
              {"pass", e.pass}};
}

Json to_json(const VerificationReport& r) {
  Json entries = Json::array();
  for (const CheckEntry& e : r.entries) entries.push_back(to_json(e));
  return Json{{"suite", r.suite},
              {"params", r.params},
              {"working_digits", r.working_digits},
              {"pass", r.pass()},
              {"failures", r.failures()},
              {"entries", entries}};
}

Json to_json(const FourierExpansion& e) {
  Json terms = Json::array();
  for (const FourierTerm& t : e.terms) {
    terms.push_back(Json{{"index", t.record.index},
                         {"lambda", to_sig(t.record.lambda, std::max(t.record.digits, 1))},
                         {"norm", certified(t.norm)},
                         {"boundary_cos", ball(t.boundary_cos)},
                         {"sign_rule", t.sign_rule},
                         {"coefficient", ball(t.coefficient)},
                         {"vanishes", t.vanishes}});
  }
  Json j{{"params", e.params.canonical()},
         {"basis", to_string(e.basis)},
         {"target", to_string(e.target)},
         {"digits", e.digits},
         {"count", e.count()},
         {"sign_rule_violation", e.sign_rule_violation},
         {"terms", terms}};
  if (e.target_record) {
    j["target_record"] = to_json(*e.target_record);
    j["target_norm"] = certified(e.target_norm);
  }
  return j;
}

Json to_json(const ParsevalSum& s) {
  return Json{{"identity", s.identity},
              {"terms", s.terms},
              {"partial", to_sci(s.partial, 15)},
              {"partial_radius", to_sci(s.partial_radius, 4)},
              {"target", to_sci(s.target, 15)},
              {"target_radius", to_sci(s.target_radius, 4)},
              {"gap", to_sci(s.gap, 6)},
              {"nondecreasing", s.nondecreasing},
              {"within_target", s.within_target}};
}

Json to_json(const Reconstruction& r) {
  return Json{{"depth", r.depth},
              {"indices", r.indices},
              {"xs", reals(r.xs)},
              {"target", reals(r.target)},
              {"partial", reals(r.partial)}};
}

}  // namespace mgl
