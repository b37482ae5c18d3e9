// mgl: coefficient tables, eigenvalues, eigenfunctions, identity checks and
// Fourier expansions for the Laplacian of a two-map self-similar measure.
//
// Exit status: 0 on success (and all checks passing), 1 on a computation
// failure or a failing check, 2 on a usage or validation error.

#include "cache.hpp"

#include "mgl/errors.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

using namespace mgl;

enum class Format { csv, json, pretty };

struct Common {
  std::string params;
  int digits = 50;
  std::string format = "pretty";
  std::string cache_dir;
  bool no_cache = false;
  std::string table_file;
};

struct PqOptions {
  int n = 19;
};

struct EigsOptions {
  std::string bc = "N";
  int count = 8;
  double below = 0;
  bool renorm = false;
};

struct EigenfunctionOptions {
  std::string bc = "N";
  int index = 1;
  int depth = 6;
  std::string family;
  bool normalize = false;
};

struct VerifyOptions {
  std::vector<std::string> suites{"all"};
  SuiteOptions suite;
};

struct FourierOptions {
  std::string target = "x";
  std::string basis = "N";
  int terms = 5;
  int count = 0;
  int depth = 6;
  bool parseval_all = false;
  double lambda_max = 1e5;
};

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  return Format::pretty;
}

MeasureParams load_params(const Common& c) {
  if (c.params.empty()) throw ValidationError("--params r1,r2,m1,m2 is required");
  return MeasureParams::parse(c.params, c.digits);
}

void setup_cache(const Common& c) {
  std::vector<PQTable> seed;
  if (!c.table_file.empty()) {
    std::ifstream in(c.table_file);
    if (!in) throw ValidationError("cannot read table file '" + c.table_file + "'");
    Json doc;
    try {
      doc = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw ValidationError("table file '" + c.table_file + "': " + e.what());
    }
    seed.push_back(pq_table_from_json(doc));
  }
  const std::filesystem::path dir = c.no_cache ? std::filesystem::path() : cli::cache_directory(c.cache_dir);
  cli::install_table_cache(dir, std::move(seed));
}

std::string lambda_text(const EigenvalueRecord& r) { return to_sig(r.lambda, std::max(r.digits, 1)); }

// ---------------------------------------------------------------------------

int cmd_pq(const Common& c, const PqOptions& o) {
  const MeasureParams p = load_params(c);
  setup_cache(c);
  const PQTable t = compute_pq(p, o.n);
  auto entry = [&t, &c](bool is_p, int n) {
    if (t.is_exact()) return to_string(is_p ? t.p_exact[static_cast<std::size_t>(n)]
                                            : t.q_exact[static_cast<std::size_t>(n)]);
    PrecisionScope scope(t.digits);
    return to_sci(is_p ? t.p(n) : t.q(n), c.digits);
  };
  switch (parse_format(c.format)) {
    case Format::json: std::cout << to_json(t).dump(2) << "\n"; break;
    case Format::csv:
      std::cout << "n,p,q\n";
      for (int n = 0; n <= t.n_max; ++n) std::cout << n << "," << entry(true, n) << "," << entry(false, n) << "\n";
      break;
    case Format::pretty:
      std::cout << "params " << p.canonical() << "  backend " << to_string(t.backend) << "\n";
      for (int n = 0; n <= t.n_max; ++n)
        std::cout << "n=" << std::setw(3) << n << "  p = " << entry(true, n) << "\n"
                  << "       q = " << entry(false, n) << "\n";
      break;
  }
  return 0;
}

void print_eigenvalues(const std::vector<EigenvalueRecord>& v, Format f) {
  switch (f) {
    case Format::json: {
      Json a = Json::array();
      for (const auto& r : v) a.push_back(to_json(r));
      std::cout << a.dump(2) << "\n";
      break;
    }
    case Format::csv:
      std::cout << "bc,index,lambda,digits,provenance,degree_used\n";
      for (const auto& r : v)
        std::cout << to_string(r.bc) << "," << r.index << "," << lambda_text(r) << "," << r.digits << ","
                  << to_string(r.provenance) << "," << r.degree_used << "\n";
      break;
    case Format::pretty:
      std::cout << std::left << std::setw(6) << "m" << std::setw(42) << "lambda" << std::setw(8) << "digits"
                << std::setw(18) << "provenance" << "degree\n";
      for (const auto& r : v)
        std::cout << std::setw(6) << r.index << std::setw(42) << lambda_text(r) << std::setw(8) << r.digits
                  << std::setw(18) << to_string(r.provenance) << r.degree_used << "\n";
      break;
  }
}

int cmd_eigs(const Common& c, const EigsOptions& o) {
  const MeasureParams p = load_params(c);
  const BoundaryCondition bc = parse_boundary_condition(o.bc);
  setup_cache(c);
  SpectrumOptions so;
  so.use_renormalization = o.renorm;
  if (o.renorm && !classify(p).has_renormalization)
    throw ValidationError("--renorm needs a measure with r1 m1 = r2 m2");
  const Format f = parse_format(c.format);
  try {
    const auto v = o.below > 0 ? find_eigenvalues_below(bc, p, o.below, c.digits, so)
                               : find_eigenvalues(bc, p, o.count, c.digits, so);
    print_eigenvalues(v, f);
  } catch (const ClusterUnresolved& e) {
    // Everything below the unresolved cluster is still certified.
    std::cerr << "error: " << e.what() << " (cluster in [" << e.lo << ", " << e.hi << "])\n";
    if (e.lo > 0) {
      std::cerr << "eigenvalues below the cluster:\n";
      print_eigenvalues(find_eigenvalues_below(bc, p, e.lo, c.digits, so), f);
    }
    return 1;
  }
  return 0;
}

int cmd_eigenfunction(const Common& c, const EigenfunctionOptions& o) {
  const MeasureParams p = load_params(c);
  const BoundaryCondition bc = parse_boundary_condition(o.bc);
  setup_cache(c);
  const int first = bc == BoundaryCondition::N ? 0 : 1;
  if (o.index < first) throw ValidationError("the index must be at least " + std::to_string(first));
  if (o.depth < 0 || o.depth > max_sample_depth)
    throw ValidationError("--depth must lie in 0.." + std::to_string(max_sample_depth));
  const Family family = o.family.empty() ? eigen_family(bc) : parse_family(o.family);
  const auto records = find_eigenvalues(bc, p, std::max(o.index, 1), c.digits);
  const EigenvalueRecord& r = records[static_cast<std::size_t>(o.index - first)];
  const TrigEngine engine(p, static_cast<unsigned>(c.digits));
  EigenfunctionSample s = sample(r, engine, o.depth, family);
  const CertifiedValue l2 = l2_norm(r, engine);
  const NormEstimate sup = sup_norm(s);
  PrecisionScope scope(engine.working_digits());
  if (o.normalize) {
    const Ball n(to_current(l2.value), to_current(l2.tail_bound));
    for (Ball& v : s.values) v = v / n;
  }
  const NormEstimate shown = o.normalize ? normalized_sup(sup, l2) : sup;
  switch (parse_format(c.format)) {
    case Format::json: {
      Json j = to_json(s);
      j["normalized"] = o.normalize;
      j["l2_norm"] = Json{{"value", to_sci(l2.value, 20)}, {"bound", to_sci(l2.tail_bound, 4)}};
      j["sup_estimate"] = to_sci(shown.value, 20);
      std::cout << j.dump(2) << "\n";
      break;
    }
    case Format::csv:
      std::cout << "x,value,radius\n";
      for (std::size_t i = 0; i < s.xs.size(); ++i)
        std::cout << to_sci(s.xs[i], 20) << "," << to_sci(s.values[i].mid, 20) << ","
                  << to_sci(s.values[i].radius(), 3) << "\n";
      break;
    case Format::pretty:
      std::cout << "params " << p.canonical() << "  " << to_string(bc) << "," << o.index << "  lambda "
                << lambda_text(r) << "\n"
                << "family " << to_string(family) << "  depth " << o.depth << "  points " << s.xs.size()
                << (o.normalize ? "  (L2-normalized)" : "") << "\n"
                << "L2 norm " << to_sig(l2.value, 12) << "  sup estimate " << to_sig(shown.value, 12) << "\n";
      for (std::size_t i = 0; i < s.xs.size(); ++i)
        std::cout << std::setw(26) << to_sci(s.xs[i], 16) << "  " << to_sci(s.values[i].mid, 16) << "\n";
      break;
  }
  return 0;
}

int cmd_verify(const Common& c, const VerifyOptions& o) {
  const MeasureParams p = load_params(c);
  setup_cache(c);
  SuiteOptions so = o.suite;
  so.digits = c.digits;
  const auto reports = run_suites(o.suites, p, so);
  bool pass = true;
  for (const auto& r : reports) pass = pass && r.pass();
  switch (parse_format(c.format)) {
    case Format::json: {
      Json a = Json::array();
      for (const auto& r : reports) a.push_back(to_json(r));
      std::cout << Json{{"params", p.canonical()}, {"pass", pass}, {"reports", a}}.dump(2) << "\n";
      break;
    }
    case Format::csv:
      std::cout << "suite,name,inputs,residual,bound,exact,pass\n";
      for (const auto& r : reports)
        for (const auto& e : r.entries)
          std::cout << r.suite << ",\"" << e.name << "\",\"" << e.inputs << "\"," << to_sci(e.residual, 6) << ","
                    << to_sci(e.bound, 6) << "," << (e.exact ? 1 : 0) << "," << (e.pass ? 1 : 0) << "\n";
      break;
    case Format::pretty:
      for (const auto& r : reports) std::cout << render_table(r) << "\n";
      std::cout << (pass ? "ALL PASS" : "FAILURES PRESENT") << "\n";
      break;
  }
  return pass ? 0 : 1;
}

void print_parseval(const std::vector<ParsevalSum>& sums, Format f, std::ostream& out) {
  if (f == Format::csv) {
    out << "identity,terms,partial,target,gap,within_target\n";
    for (const auto& s : sums)
      out << "\"" << s.identity << "\"," << s.terms << "," << to_sci(s.partial, 15) << "," << to_sci(s.target, 15)
          << "," << to_sci(s.gap, 6) << "," << (s.within_target ? 1 : 0) << "\n";
    return;
  }
  for (const auto& s : sums)
    out << s.identity << "\n  terms " << s.terms << "  partial " << to_sig(s.partial, 12) << "  target "
        << to_sig(s.target, 12) << "  gap " << to_sci(s.gap, 3) << "\n";
}

int cmd_fourier(const Common& c, const FourierOptions& o) {
  const MeasureParams p = load_params(c);
  setup_cache(c);
  const Format f = parse_format(c.format);
  if (o.parseval_all) {
    const auto sums = parseval_sums(p, o.lambda_max, c.digits);
    if (f == Format::json) {
      Json a = Json::array();
      for (const auto& s : sums) a.push_back(to_json(s));
      std::cout << Json{{"params", p.canonical()}, {"lambda_max", o.lambda_max}, {"parseval", a}}.dump(2) << "\n";
    } else {
      print_parseval(sums, f, std::cout);
    }
    return 0;
  }
  if (o.terms < 0) throw ValidationError("--terms must be nonnegative");
  const BoundaryCondition basis = parse_boundary_condition(o.basis);
  const FourierTarget target = parse_fourier_target(o.target);
  const int count = o.count > 0 ? o.count : std::max(2 * o.terms + 1, 4);
  const FourierExpansion e = expand(target, basis, p, count, c.digits);
  const Reconstruction rec = reconstruct(e, o.depth, o.terms);
  std::vector<ParsevalSum> sums;
  try {
    sums.push_back(parseval(e));
  } catch (const ValidationError&) {
    // no closed-form Parseval identity for this target and basis
  }
  switch (f) {
    case Format::json: {
      Json j{{"expansion", to_json(e)}, {"reconstruction", to_json(rec)}};
      if (!sums.empty()) j["parseval"] = to_json(sums.front());
      std::cout << j.dump(2) << "\n";
      break;
    }
    case Format::csv:
      std::cout << "index,lambda,norm,coefficient,vanishes,sign_rule\n";
      for (const auto& t : e.terms)
        std::cout << t.record.index << "," << lambda_text(t.record) << "," << to_sci(t.norm.value, 15) << ","
                  << to_sci(t.coefficient.mid, 15) << "," << (t.vanishes ? 1 : 0) << "," << (t.sign_rule ? 1 : 0)
                  << "\n";
      std::cout << "\nx,target,partial_sum\n";
      for (std::size_t i = 0; i < rec.xs.size(); ++i)
        std::cout << to_sci(rec.xs[i], 16) << "," << to_sci(rec.target[i], 16) << "," << to_sci(rec.partial[i], 16)
                  << "\n";
      if (!sums.empty()) {
        std::cout << "\n";
        print_parseval(sums, f, std::cout);
      }
      break;
    case Format::pretty:
      std::cout << "params " << p.canonical() << "  target " << to_string(target) << "  basis " << to_string(basis)
                << "\n";
      for (const auto& t : e.terms)
        std::cout << "a_" << std::left << std::setw(4) << t.record.index << std::right << std::setw(24)
                  << (t.vanishes ? std::string("0") : to_sci(t.coefficient.mid, 15)) << "   n_k "
                  << to_sig(t.norm.value, 10) << "\n";
      std::cout << "sign rule cos(sqrt(lambda_k)) = (-1)^k: "
                << (e.sign_rule_violation < 0 ? std::string("holds")
                                              : "violated at k = " + std::to_string(e.sign_rule_violation))
                << "\n";
      std::cout << "reconstruction with terms";
      for (int k : rec.indices) std::cout << " " << k;
      std::cout << " at " << rec.xs.size() << " corner points of depth " << rec.depth << "\n";
      if (!sums.empty()) print_parseval(sums, f, std::cout);
      break;
  }
  return 0;
}

void add_common(CLI::App* app, Common& c) {
  app->add_option("--params", c.params, "r1,r2,m1,m2 as fractions, decimals or 'natural' weights")->required();
  app->add_option("--digits", c.digits, "working / certified decimal digits")->check(CLI::Range(5, 2000));
  app->add_option("--format", c.format, "output format")->check(CLI::IsMember({"csv", "json", "pretty"}));
  app->add_option("--cache-dir", c.cache_dir, "coefficient table cache (default: MGL_CACHE_DIR or ~/.cache/mgl)");
  app->add_flag("--no-cache", c.no_cache, "do not read or write the table cache");
  app->add_option("--table", c.table_file, "coefficient table JSON (output of 'pq --format json') to reuse");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral toolkit for the Laplacian of two-map self-similar measures"};
  app.require_subcommand(1);

  Common common;
  PqOptions pq;
  EigsOptions eigs;
  EigenfunctionOptions ef;
  VerifyOptions verify;
  FourierOptions fourier;

  CLI::App* pq_cmd = app.add_subcommand("pq", "coefficient table p_n, q_n");
  add_common(pq_cmd, common);
  pq_cmd->add_option("--n", pq.n, "largest index")->check(CLI::Range(1, 100000));

  CLI::App* eigs_cmd = app.add_subcommand("eigs", "certified eigenvalues");
  add_common(eigs_cmd, common);
  eigs_cmd->add_option("--bc", eigs.bc, "boundary condition")->check(CLI::IsMember({"N", "D", "ND", "DN"}));
  eigs_cmd->add_option("--count", eigs.count, "number of eigenvalues")->check(CLI::Range(1, 100000));
  eigs_cmd->add_option("--below", eigs.below, "all eigenvalues below this value instead of --count");
  eigs_cmd->add_flag("--renorm", eigs.renorm, "rescale even Neumann eigenvalues when the measure allows it");

  CLI::App* ef_cmd = app.add_subcommand("eigenfunction", "eigenfunction at the corner points");
  add_common(ef_cmd, common);
  ef_cmd->add_option("--bc", ef.bc, "boundary condition")->check(CLI::IsMember({"N", "D", "ND", "DN"}));
  ef_cmd->add_option("--index", ef.index, "eigenvalue index");
  ef_cmd->add_option("--depth", ef.depth, "corner-point depth");
  ef_cmd->add_option("--family", ef.family, "c_lm, s_lm, c_ml or s_ml (default: the eigenfunction)");
  ef_cmd->add_flag("--normalize", ef.normalize, "divide by the certified L2 norm");

  CLI::App* verify_cmd = app.add_subcommand("verify", "identity verification suites");
  add_common(verify_cmd, common);
  verify_cmd->add_option("--suite", verify.suites, "suites to run (all, coefficients, pythagorean, functional, "
                                                   "rearranged, eigen_zero, symmetric, coincidence)");
  verify_cmd->add_option("--n-max", verify.suite.n_max, "coefficient table length");
  verify_cmd->add_option("--z-max", verify.suite.z_max, "largest z of the grid");
  verify_cmd->add_option("--grid", verify.suite.grid_points, "grid points");
  verify_cmd->add_option("--depth", verify.suite.depth, "corner-point depth");
  verify_cmd->add_option("--eigen-count", verify.suite.eigen_count, "Neumann eigenvalues used");

  CLI::App* fourier_cmd = app.add_subcommand("fourier", "Fourier coefficients, reconstruction and Parseval sums");
  add_common(fourier_cmd, common);
  fourier_cmd->add_option("--target", fourier.target, "x, 1 or fD<j>");
  fourier_cmd->add_option("--basis", fourier.basis, "N or D")->check(CLI::IsMember({"N", "D"}));
  fourier_cmd->add_option("--terms", fourier.terms, "nonvanishing terms in the reconstruction");
  fourier_cmd->add_option("--count", fourier.count, "coefficients to compute (default 2 terms + 1)");
  fourier_cmd->add_option("--depth", fourier.depth, "corner-point depth of the reconstruction");
  fourier_cmd->add_flag("--parseval", fourier.parseval_all, "all four Parseval identities below --lambda-max");
  fourier_cmd->add_option("--lambda-max", fourier.lambda_max, "eigenvalue cutoff for --parseval");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (pq_cmd->parsed()) return cmd_pq(common, pq);
    if (eigs_cmd->parsed()) return cmd_eigs(common, eigs);
    if (ef_cmd->parsed()) return cmd_eigenfunction(common, ef);
    if (verify_cmd->parsed()) return cmd_verify(common, verify);
    if (fourier_cmd->parsed()) return cmd_fourier(common, fourier);
  } catch (const ComputationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
