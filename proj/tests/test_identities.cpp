#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mgl/errors.hpp"
#include "mgl/identities.hpp"

using namespace mgl;

namespace {

const MeasureParams cantor = MeasureParams::parse("1/3,1/3,1/2,1/2");
const MeasureParams lebesgue = MeasureParams::parse("1/2,1/2,1/2,1/2");
const MeasureParams seventh = MeasureParams::parse("1/3,1/4,3/7,4/7");
const MeasureParams dimension = MeasureParams::parse("1/3,1/4,natural,natural");
const MeasureParams coincident_a = MeasureParams::parse("0.6,0.4,0.4,0.6");
const MeasureParams coincident_b = MeasureParams::parse("0.9,0.1,0.1,0.9");

double to_d(const Real& x) { return static_cast<double>(x); }

const CheckEntry& find(const VerificationReport& r, const std::string& name, const std::string& inputs) {
  for (const CheckEntry& e : r.entries)
    if (e.name == name && e.inputs.rfind(inputs, 0) == 0) return e;
  FAIL("entry not found: " << name << " " << inputs);
  return r.entries.front();
}

}  // namespace

TEST_CASE("h at zero is r1 + r2") {
  const TrigEngine e(seventh, 40);
  PrecisionScope scope(e.working_digits());
  const CertifiedValue h = h_value(e, Real(0));
  CHECK(to_d(abs(h.value - Real(7) / 12)) <= to_d(h.tail_bound) + 1e-45);
}

TEST_CASE("Values at the square roots of Cantor Neumann eigenvalues") {
  const TrigEngine e(cantor, 50);
  const auto n = find_eigenvalues(BoundaryCondition::N, cantor, 4, 50);
  VerificationReport r;
  for (int m = 1; m <= 4; ++m) eigen_zero_values(cantor, e, n[m], r);
  CHECK(r.pass());
  PrecisionScope scope(e.working_digits());
  const TrigQuad q1 = e.eval_all(sqrt(n[1].lambda));
  CHECK(to_d(abs(q1.cosN.v.mid + 1)) < 1e-45);
  CHECK(to_d(abs(q1.sinD.v.mid - sqrt(n[1].lambda) / 3)) < 1e-45);
  const TrigQuad q2 = e.eval_all(sqrt(n[2].lambda));
  CHECK(to_d(abs(q2.cosN.v.mid - 1)) < 1e-45);
  // h(z_m) for odd m is r1 (-1) + r2 (-1) = -2/3; h(sqrt(r1 m1) z_1) = 0.
  CHECK(to_d(h_value(e, sqrt(n[1].lambda)).value) == doctest::Approx(-2.0 / 3));
  CHECK(std::abs(to_d(h_value(e, sqrt(n[1].lambda / 6)).value)) < 1e-40);
  CHECK_THROWS_AS(eigen_zero_values(dimension, e, n[1], r), ValidationError);
}

TEST_CASE("First Neumann eigenvalue of the sevenths measure gives cosN = -3/4") {
  const TrigEngine e(seventh, 50);
  const auto n = find_eigenvalues(BoundaryCondition::N, seventh, 1, 50);
  PrecisionScope scope(e.working_digits());
  CHECK(to_d(abs(e.eval_all(sqrt(n[1].lambda)).cosN.v.mid + Real(3) / 4)) < 1e-45);
  CHECK(eigen_zero_suite(seventh, e, n).pass());
}

TEST_CASE("Symmetric suite holds exactly on the Cantor table") {
  const PQTable t = compute_pq(cantor, 20);
  const TrigEngine e(cantor, 50);
  PrecisionScope scope(e.working_digits());
  const VerificationReport r = symmetric_suite(t, e, {Real(3), Real(25)}, 5);
  CHECK(r.pass());
  const CheckEntry& first = find(r, "sum p_2k p_2n-2k+1 = sum p_2k+1 q_2n-2k", "n=1");
  CHECK(first.exact);
  CHECK(first.residual == 0);
  CHECK(find(r, "cosN^2 + sinN sinD = 1", "z=3").pass);
  CHECK_THROWS_AS(symmetric_suite(compute_pq(seventh, 10), e, {}, 3), ValidationError);
}

TEST_CASE("Coincidence suite for r1 = m2 and r2 = m1") {
  for (const MeasureParams* p : {&coincident_a, &coincident_b, &lebesgue}) {
    const MeasureParams q = p->with_digits(50);
    const PQTable t = compute_pq(q, 30);
    const TrigEngine e(q, 50);
    const auto n = find_eigenvalues(BoundaryCondition::N, q, 3, 50);
    const VerificationReport r = coincidence_suite(t, e, n, 5);
    CHECK(r.pass());
    CHECK(r.entries.size() == 15u + 3u);
  }
  CHECK_THROWS_AS(coincidence_suite(compute_pq(cantor, 10), TrigEngine(cantor, 30), {}, 3),
                  ValidationError);
}

TEST_CASE("Rearranged equations at fixed points") {
  {
    const TrigEngine e(cantor, 50);
    PrecisionScope scope(e.working_digits());
    CHECK(rearranged_equation_suite(e, {Real(0), Real(4)}).pass());
  }
  {
    const TrigEngine e(seventh, 50);
    PrecisionScope scope(e.working_digits());
    CHECK(rearranged_equation_suite(e, {Real(2)}).pass());
  }
  const TrigEngine e(dimension, 30);
  CHECK_THROWS_AS(rearranged_equation_suite(e, {Real(2)}), ValidationError);
}

TEST_CASE("A corrupted table is detected") {
  PQTable t = compute_pq(cantor, 12);
  t.p_exact[5] += Rational(1, 1000000);
  CHECK_FALSE(coefficient_suite(t).pass());
  const TrigEngine e(cantor, 30);
  PrecisionScope scope(e.working_digits());
  CHECK_FALSE(symmetric_suite(t, e, {}, 2).pass());
}

TEST_CASE("Every applicable suite passes at 50 digits on the example parameter sets") {
  for (const MeasureParams* p : {&cantor, &lebesgue, &dimension, &seventh, &coincident_a, &coincident_b}) {
    CAPTURE(p->canonical());
    const auto reports = run_suites({"all"}, *p);
    CHECK(reports.size() >= 3u);
    for (const VerificationReport& r : reports) {
      CAPTURE(r.suite);
      CHECK(r.pass());
      if (r.suite != "coefficients") CHECK(r.working_digits >= 50);
      for (const CheckEntry& e : r.entries) CHECK((e.residual <= e.bound) == e.pass);
    }
  }
}

TEST_CASE("Suite selection") {
  CHECK(suite_applies("symmetric", cantor));
  CHECK_FALSE(suite_applies("symmetric", seventh));
  CHECK(suite_applies("coincidence", coincident_a));
  CHECK_FALSE(suite_applies("rearranged", dimension));
  CHECK_THROWS_AS(run_suites({"symmetric"}, seventh), ValidationError);
  CHECK_THROWS_AS(run_suites({"nonsense"}, cantor), ValidationError);
  SuiteOptions o;
  o.n_max = 10;
  o.grid_points = 4;
  const auto r = run_suites({"coefficients", "pythagorean"}, cantor, o);
  REQUIRE(r.size() == 2u);
  CHECK(r[0].suite == "coefficients");
  const std::string table = render_table(r[1]);
  CHECK(table.find("PASS") != std::string::npos);
  CHECK(table.find("cosD cosN + sinD sinN = 1") != std::string::npos);
}

TEST_CASE("Logarithmic grid") {
  PrecisionScope scope(30);
  const auto g = log_grid(Real(100), 32);
  REQUIRE(g.size() == 32u);
  CHECK(to_d(g.front()) == doctest::Approx(0.1));
  CHECK(g.back() == 100);
  for (std::size_t i = 1; i < g.size(); ++i) CHECK(g[i - 1] < g[i]);
}
