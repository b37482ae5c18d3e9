#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mgl/errors.hpp"
#include "mgl/measure.hpp"

using namespace mgl;

TEST_CASE("validate accepts the Cantor parameters with the exact backend") {
  const auto p = MeasureParams::parse("1/3,1/3,1/2,1/2");
  CHECK(p.is_exact());
  CHECK(p.canonical() == "1/3,1/3,1/2,1/2");
}

TEST_CASE("validate reduces fractions and accepts integers") {
  const auto p = MeasureParams::parse("2/6, 1/3, 1/2, 2/4");
  CHECK(p.canonical() == "1/3,1/3,1/2,1/2");
}

TEST_CASE("validate rejects overlapping maps and bad weights") {
  CHECK_THROWS_AS(MeasureParams::parse("0.6,0.6,0.4,0.6"), ValidationError);
  CHECK_THROWS_AS(MeasureParams::parse("0.5,0.6,0.5,0.5"), ValidationError);
  CHECK_THROWS_AS(MeasureParams::parse("1/2,1/2,1/2,1/3"), ValidationError);
  CHECK_THROWS_AS(MeasureParams::parse("-1/2,1/2,1/2,1/2"), ValidationError);
  CHECK_THROWS_AS(MeasureParams::parse("1/2,1/2,x,1/2"), ValidationError);
  CHECK_THROWS_AS(MeasureParams::parse("1/2,1/2,1/2"), ValidationError);
}

TEST_CASE("decimal input selects the real backend") {
  const auto p = MeasureParams::parse("0.9,0.1,0.1,0.9", 30);
  CHECK(p.backend() == Backend::high_precision_real);
  CHECK(p.working_digits() == 30);
}

TEST_CASE("classify Cantor") {
  const auto c = classify(MeasureParams::parse("1/3,1/3,1/2,1/2"));
  CHECK(c.is_symmetric);
  CHECK(c.has_renormalization);
  CHECK_FALSE(c.is_lebesgue);
  CHECK_FALSE(c.dirichlet_equals_neumann);
  REQUIRE(c.renorm_factor_exact);
  CHECK(*c.renorm_factor_exact == 6);
}

TEST_CASE("classify Lebesgue") {
  const auto c = classify(MeasureParams::parse("1/2,1/2,1/2,1/2"));
  CHECK(c.is_lebesgue);
  CHECK(c.is_symmetric);
  CHECK(c.dirichlet_equals_neumann);
  CHECK(*c.renorm_factor_exact == 4);
}

TEST_CASE("classify the coincidence case from decimal input") {
  const auto c = classify(MeasureParams::parse("0.6,0.4,0.4,0.6"));
  CHECK(c.dirichlet_equals_neumann);
  CHECK(c.has_renormalization);
  CHECK_FALSE(c.is_symmetric);
  REQUIRE(c.renorm_factor);
  PrecisionScope scope(40);
  CHECK(abs(*c.renorm_factor - Real(1) / Real("0.24")) < Real("1e-38"));
}

TEST_CASE("classify the factor-seven example") {
  const auto c = classify(MeasureParams::parse("1/3,1/4,3/7,4/7"));
  CHECK(c.has_renormalization);
  CHECK_FALSE(c.is_symmetric);
  CHECK(*c.renorm_factor_exact == 7);
}

TEST_CASE("classification invariants hold on a parameter sweep") {
  for (int a = 1; a <= 5; ++a)
    for (int b = 1; b <= 5; ++b)
      for (int w = 1; w <= 5; ++w) {
        const Rational r1(a, 10), r2(b, 10), m1(w, 6), m2 = 1 - m1;
        const auto c = classify(MeasureParams::exact(r1, r2, m1, m2));
        if (c.dirichlet_equals_neumann) {
          CHECK(c.has_renormalization);
          CHECK(r1 + r2 == 1);
        }
        CHECK(c.renorm_factor.has_value() == c.has_renormalization);
        if (c.is_lebesgue && c.is_symmetric) CHECK(r1 == Rational(1, 2));
        const auto again = classify(MeasureParams::exact(r1, r2, m1, m2));
        CHECK(again.is_symmetric == c.is_symmetric);
      }
}

TEST_CASE("natural weights solve r1^d + r2^d = 1") {
  const auto p = MeasureParams::parse("1/3,1/4,natural,natural");
  CHECK(p.backend() == Backend::high_precision_real);
  PrecisionScope scope(60);
  const RealParams v = p.real();
  const Real d = similarity_dimension(v.r1, v.r2);
  CHECK(abs(d - Real("0.56049886522386387883902233")) < Real("1e-26"));
  CHECK(abs(v.m1 + v.m2 - 1) < Real("1e-55"));
  CHECK(abs(v.m1 - pow(v.r1, d)) < Real("1e-55"));
}
