#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mgl/errors.hpp"
#include "mgl/pq_engine.hpp"
#include "reference_data.hpp"

#include <chrono>
#include <cmath>
#include <random>

using namespace mgl;

namespace {

Rational frac(std::string_view s) {
  Rational q;
  REQUIRE(parse_fraction(std::string(s), q));
  return q;
}

const MeasureParams cantor = MeasureParams::parse("1/3,1/3,1/2,1/2");
const MeasureParams lebesgue = MeasureParams::parse("1/2,1/2,1/2,1/2");
const MeasureParams seventh = MeasureParams::parse("1/3,1/4,3/7,4/7");

}  // namespace

TEST_CASE("Cantor exact table reproduces the published fractions") {
  const auto start = std::chrono::steady_clock::now();
  const PQTable t = compute_pq(cantor, 19);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(secs < 1.0);
  REQUIRE(t.is_exact());
  for (int n = 0; n <= 9; ++n) {
    CHECK(t.p_exact[2 * n + 1] == frac(reference::cantor_p_odd[n]));
    CHECK(t.q_exact[2 * n + 1] == frac(reference::cantor_q_odd[n]));
    CHECK(t.p_exact[2 * n] == frac(reference::cantor_even[n]));
    CHECK(t.q_exact[2 * n] == frac(reference::cantor_even[n]));
  }
}

TEST_CASE("series coefficients of sinN in factorial form") {
  const PQTable t = compute_pq(cantor, 5);
  CHECK(t.p_exact[3] * 6 == Rational(6, 5));
  CHECK(t.p_exact[5] * 120 == Rational(81, 70));
}

TEST_CASE("Lebesgue table is 1/n!") {
  const PQTable t = compute_pq(lebesgue, 20);
  Rational f = 1;
  for (int n = 0; n <= 20; ++n) {
    if (n > 0) f /= n;
    CHECK(t.p_exact[n] == f);
    CHECK(t.q_exact[n] == f);
  }
}

TEST_CASE("table invariants: positivity, domination and factorial bounds") {
  for (const auto& params : {cantor, seventh, MeasureParams::parse("1/5,2/3,1/4,3/4"),
                             MeasureParams::parse("3/5,2/5,2/5,3/5")}) {
    const PQTable t = compute_pq(params, 30);
    CHECK(t.p_exact[0] == 1);
    CHECK(t.p_exact[1] == 1);
    CHECK(t.q_exact[0] == 1);
    CHECK(t.q_exact[1] == 1);
    Rational fact = 1;
    for (int n = 0; n <= 30; ++n) {
      CHECK(t.p_exact[n] > 0);
      CHECK(t.q_exact[n] > 0);
      if (n >= 1 && n + 1 <= 30) {
        CHECK(t.q_exact[n + 1] <= t.p_exact[n]);
        CHECK(t.p_exact[n + 1] <= t.q_exact[n]);
      }
    }
    const Rational p2 = t.p_exact[2], q2 = t.q_exact[2];
    Rational pp = 1, qq = 1;
    for (int n = 0; 2 * n + 1 <= 30; ++n) {
      if (n > 0) {
        fact *= n;
        pp *= p2;
        qq *= q2;
      }
      CHECK(t.p_exact[2 * n + 1] <= qq / fact);
      CHECK(t.q_exact[2 * n + 1] <= pp / fact);
      CHECK(t.p_exact[2 * n] <= pp / fact);
      CHECK(t.q_exact[2 * n] <= qq / fact);
    }
  }
}

TEST_CASE("coincidence parameters have equal odd entries") {
  const PQTable t = compute_pq(MeasureParams::parse("3/5,2/5,2/5,3/5"), 25);
  for (int n = 0; 2 * n + 1 <= 25; ++n) CHECK(t.p_exact[2 * n + 1] == t.q_exact[2 * n + 1]);
}

TEST_CASE("symmetric even shortcut agrees with the recursion") {
  const PQTable t = compute_pq(cantor, 24);
  CHECK(symmetric_even_shortcut(t, 1).exact == Rational(1, 2));
  CHECK(symmetric_even_shortcut(t, 2).exact == Rational(3, 80));
  CHECK(symmetric_even_shortcut(t, 4).exact == Rational(Integer(4716349), Integer("329780416000")));
  for (int n = 1; 2 * n <= 24; ++n) CHECK(symmetric_even_shortcut(t, n).exact == t.p_exact[2 * n]);
  CHECK_THROWS_AS(symmetric_even_shortcut(compute_pq(seventh, 6), 1), ValidationError);
}

TEST_CASE("cross identity vanishes exactly") {
  const PQTable t = compute_pq(cantor, 40);
  for (int n = 1; 2 * n <= 40; ++n) CHECK(cross_identity_check(t, n).exact == Rational(0));
  CHECK_THROWS_AS(cross_identity_check(t, 0), ValidationError);
  const PQTable s = compute_pq(seventh, 8);
  CHECK(cross_identity_check(s, 4).exact == Rational(0));
}

TEST_CASE("cross identity on the real backend is within tolerance") {
  const auto params = MeasureParams::parse("0.3333333333,0.25,0.4285714286,0.5714285714", 40);
  const PQTable t = compute_pq(params, 20);
  REQUIRE_FALSE(t.is_exact());
  PrecisionScope scope(t.digits);
  for (int n = 1; n <= 10; ++n) CHECK(abs(cross_identity_check(t, n).approx) < pow10(5 - 40));
}

TEST_CASE("binomial analogues hold exactly") {
  const PQTable c = compute_pq(cantor, 21);
  for (int n = 1; 2 * n + 1 <= 21; ++n)
    for (const auto& r : binomial_analogue_check(c, n)) CHECK(r.exact == Rational(0));
  const PQTable l = compute_pq(lebesgue, 7);
  for (const auto& r : binomial_analogue_check(l, 3)) CHECK(r.exact == Rational(0));
}

TEST_CASE("binomial analogues on the real backend") {
  const auto params = MeasureParams::parse("0.9,0.1,0.1,0.9", 50);
  const PQTable t = compute_pq(params, 11);
  PrecisionScope scope(t.digits);
  for (const auto& r : binomial_analogue_check(t, 5)) CHECK(abs(r.approx) < pow10(10 - 50));
}

TEST_CASE("real table agrees with the exact table within its error bound") {
  const PQTable e = compute_pq(seventh, 60);
  const PQTable r = compute_pq_real(seventh, 60, 40);
  PrecisionScope scope(80);
  for (int n = 0; n <= 60; ++n) {
    const Real ex = to_real(e.p_exact[n]);
    CHECK(abs(r.p(n) - ex) <= r.rel_error(n) * ex);
    const Real eq = to_real(e.q_exact[n]);
    CHECK(abs(r.q(n) - eq) <= r.rel_error(n) * eq);
  }
}

TEST_CASE("quadrature oracle converges to the table") {
  auto [p3, q3] = quadrature_oracle(cantor, 3, 12);
  CHECK(std::fabs(p3 - 0.2) < 1e-4);
  CHECK(std::fabs(q3 - 0.125) < 1e-4);
  auto [p4, q4] = quadrature_oracle(lebesgue, 4, 12);
  CHECK(std::fabs(p4 - 1.0 / 24) < 1e-4);
  CHECK(std::fabs(q4 - 1.0 / 24) < 1e-4);
  const PQTable t = compute_pq(seventh, 8);
  for (int n = 1; n <= 8; ++n) {
    auto [p, q] = quadrature_oracle(seventh, n, 12);
    const double tp = static_cast<double>(t.p_exact[n]), tq = static_cast<double>(t.q_exact[n]);
    CHECK(std::fabs(p - tp) / tp < 1e-3);
    CHECK(std::fabs(q - tq) / tq < 1e-3);
  }
}

TEST_CASE("exact table on random rationals to level 30") {
  std::mt19937_64 rng(12345);
  auto next = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (int trial = 0; trial < 3; ++trial) {
    const int d = next(3, 9);
    const int a = next(1, d - 1);
    const int b = next(1, d - a);
    const int wd = next(2, 9);
    const int w = next(1, wd - 1);
    const auto params = MeasureParams::exact(Rational(a, d), Rational(b, d), Rational(w, wd), Rational(wd - w, wd));
    const PQTable t = compute_pq(params, 60);
    for (int n = 1; n <= 30; ++n) CHECK(cross_identity_check(t, n).exact == Rational(0));
  }
}
