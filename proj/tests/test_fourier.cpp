#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mgl/errors.hpp"
#include "mgl/fourier.hpp"

#include <boost/math/constants/constants.hpp>

using namespace mgl;

namespace {

const MeasureParams cantor = MeasureParams::parse("1/3,1/3,1/2,1/2");
const MeasureParams lebesgue = MeasureParams::parse("1/2,1/2,1/2,1/2");

double to_d(const Real& x) { return static_cast<double>(x); }
double mid(const Ball& b) { return static_cast<double>(b.mid); }

FourierTarget target(const std::string& s) { return parse_fourier_target(s); }

}  // namespace

TEST_CASE("Target names") {
  CHECK(target("x").kind == FourierTargetKind::identity_x);
  CHECK(target("1").kind == FourierTargetKind::constant_one);
  const FourierTarget f = target("fD3");
  CHECK(f.kind == FourierTargetKind::dirichlet_eigenfunction);
  CHECK(f.index == 3);
  CHECK(to_string(f) == "fD3");
  CHECK_THROWS_AS(target("fD0"), ValidationError);
  CHECK_THROWS_AS(target("y"), ValidationError);
}

TEST_CASE("x in the Cantor Neumann basis") {
  const FourierExpansion e = expand(target("x"), BoundaryCondition::N, cantor, 6);
  REQUIRE(e.count() == 6);
  CHECK(e.sign_rule_violation == -1);
  CHECK(mid(e.terms[0].coefficient) == doctest::Approx(0.5).epsilon(1e-15));
  for (int k = 2; k < 6; k += 2) CHECK(e.terms[static_cast<std::size_t>(k)].vanishes);
  for (int k = 1; k < 6; k += 2) {
    const FourierTerm& t = e.terms[static_cast<std::size_t>(k)];
    CHECK_FALSE(t.vanishes);
    CHECK(t.sign_rule);
    CHECK(mid(t.coefficient) ==
          doctest::Approx(-2 / (to_d(t.norm.value) * to_d(t.record.lambda))).epsilon(1e-12));
  }
  CHECK(mid(e.terms[1].coefficient) == doctest::Approx(-0.35176045).epsilon(1e-7));
}

TEST_CASE("Closed forms agree with depth-12 quadrature") {
  for (const char* name : {"x", "1", "fD1"}) {
    for (BoundaryCondition b : {BoundaryCondition::N, BoundaryCondition::D}) {
      CAPTURE(name);
      CAPTURE(to_string(b));
      const FourierExpansion e = expand(target(name), b, cantor, 4);
      for (int i = 0; i < e.count(); ++i) {
        CAPTURE(i);
        const Real q = quadrature_coefficient(e, i, 12);
        CHECK(std::abs(to_d(q) - mid(e.terms[static_cast<std::size_t>(i)].coefficient)) < 1e-3);
      }
    }
  }
}

TEST_CASE("Classical coefficients for the Lebesgue measure") {
  const double pi = boost::math::constants::pi<double>();
  const double root2 = std::sqrt(2.0);
  const FourierExpansion one = expand(target("1"), BoundaryCondition::D, lebesgue, 5);
  for (int k = 1; k <= 5; ++k) {
    const double expected = k % 2 == 1 ? 2 * root2 / (k * pi) : 0;
    CHECK(mid(one.terms[static_cast<std::size_t>(k - 1)].coefficient) ==
          doctest::Approx(expected).epsilon(1e-12));
  }
  const FourierExpansion x = expand(target("x"), BoundaryCondition::N, lebesgue, 4);
  CHECK(mid(x.terms[1].coefficient) == doctest::Approx(-2 * root2 / (pi * pi)).epsilon(1e-12));
  CHECK(mid(x.terms[3].coefficient) == doctest::Approx(-2 * root2 / (9 * pi * pi)).epsilon(1e-12));
  // sin(pi x) in the cosine basis; k = 1 has lambda_{N,1} = lambda_{D,1}.
  const FourierExpansion f = expand(target("fD1"), BoundaryCondition::N, lebesgue, 4);
  CHECK(mid(f.terms[0].coefficient) == doctest::Approx(2 / pi).epsilon(1e-12));
  CHECK(f.terms[1].vanishes);
  CHECK(mid(f.terms[2].coefficient) == doctest::Approx(-2 * root2 / (3 * pi)).epsilon(1e-12));
  CHECK(f.sign_rule_violation == -1);
}

TEST_CASE("Eigenfunction in its own basis") {
  const FourierExpansion e = expand(target("fD2"), BoundaryCondition::D, cantor, 3);
  CHECK(e.terms[0].vanishes);
  CHECK(mid(e.terms[1].coefficient) == doctest::Approx(to_d(e.target_norm.value)));
  CHECK(e.terms[2].vanishes);
}

TEST_CASE("Parseval identities with closed-form targets") {
  const ParsevalSum x = parseval(expand(target("x"), BoundaryCondition::N, cantor, 32));
  CHECK(to_d(x.target) == doctest::Approx(1.0 / 32).epsilon(1e-15));
  CHECK(x.terms == 31);
  CHECK(x.nondecreasing);
  CHECK(x.within_target);
  CHECK(to_d(x.gap) >= 0);
  CHECK(to_d(x.gap) < 1e-7);

  const ParsevalSum d = parseval(expand(target("x"), BoundaryCondition::D, cantor, 8));
  CHECK(to_d(d.target) == doctest::Approx(3.0 / 8).epsilon(1e-15));
  CHECK(d.within_target);
  CHECK(to_d(d.partial) == doctest::Approx(0.33737607).epsilon(1e-7));

  const ParsevalSum one = parseval(expand(target("1"), BoundaryCondition::D, lebesgue, 40));
  const double pi = boost::math::constants::pi<double>();
  double classical = 0;
  for (int k = 1; k <= 40; k += 2) classical += 2 / (pi * pi * k * k);
  CHECK(to_d(one.partial) == doctest::Approx(classical).epsilon(1e-12));
  CHECK(to_d(one.target) == 0.25);

  const ParsevalSum f = parseval(expand(target("fD1"), BoundaryCondition::N, cantor, 12));
  CHECK(f.within_target);
  CHECK(to_d(f.gap) < 1e-5);

  CHECK_THROWS_AS(parseval(expand(target("1"), BoundaryCondition::N, cantor, 2)), ValidationError);
  CHECK_THROWS_AS(parseval(expand(target("fD2"), BoundaryCondition::N, cantor, 2)), ValidationError);
}

TEST_CASE("Reconstruction on the corner grid") {
  const FourierExpansion one = expand(target("1"), BoundaryCondition::N, cantor, 3);
  const Reconstruction r0 = reconstruct(one, 4, 0);
  REQUIRE(r0.xs.size() == 32u);
  for (const Real& v : r0.partial) CHECK(v == 0);
  const Reconstruction r1 = reconstruct(one, 4, 1);
  for (const Real& v : r1.partial) CHECK(to_d(v) == doctest::Approx(1).epsilon(1e-15));
  CHECK_THROWS_AS(reconstruct(one, 4, 2), ValidationError);

  const FourierExpansion x = expand(target("x"), BoundaryCondition::D, cantor, 5);
  const Reconstruction rx = reconstruct(x, 6, 5);
  CHECK(rx.indices == std::vector<int>{1, 2, 3, 4, 5});
  CHECK(rx.target == rx.xs);
  CHECK(rx.partial.front() == 0);
  double err = 0;
  for (std::size_t i = 0; i < rx.xs.size(); ++i) err += std::abs(to_d(rx.partial[i] - rx.target[i]));
  CHECK(err / static_cast<double>(rx.xs.size()) < 0.2);

  const FourierExpansion f = expand(target("fD1"), BoundaryCondition::N, cantor, 6);
  CHECK(reconstruct(f, 5, 3).indices == std::vector<int>{0, 2, 4});
}

TEST_CASE("Invalid requests") {
  const MeasureParams asym = MeasureParams::parse("1/3,1/4,3/7,4/7");
  CHECK_THROWS_AS(expand(target("x"), BoundaryCondition::N, asym, 3), ValidationError);
  CHECK_THROWS_AS(expand(target("x"), BoundaryCondition::ND, cantor, 3), ValidationError);
  CHECK_THROWS_AS(expand(target("x"), BoundaryCondition::N, cantor, 0), ValidationError);
  const FourierExpansion e = expand(target("x"), BoundaryCondition::N, cantor, 2);
  CHECK_THROWS_AS(quadrature_coefficient(e, 2, 4), ValidationError);
  CHECK_THROWS_AS(reconstruct(e, max_sample_depth + 1, 1), ValidationError);
}
