#include "doctest.h"
#include "support.hpp"

#include "dircyc/expression.hpp"
#include "dircyc/spaces.hpp"

using namespace dircyc;

TEST_SUITE("spaces") {
  TEST_CASE("weights") {
    CHECK(weight(SpaceSpec::iso(2), 1, 1) == 9.0);
    CHECK(weight(SpaceSpec::aniso(2), 1, 1) == 16.0);
    for (double a : {-3.0, -0.5, 0.0, 1.7, 4.0}) {
      CHECK(weight(SpaceSpec::iso(a), 0, 0) == 1.0);
      CHECK(weight(SpaceSpec::aniso(a), 0, 0) == 1.0);
      CHECK(weight(SpaceSpec::uni(a), 0, 0) == 1.0);
      CHECK(weight(SpaceSpec::iso(a), 7, 3) > 0.0);
    }
    CHECK(weight(SpaceSpec::uni(3), 4, 0) == 125.0);
    CHECK_THROWS_AS(weight(SpaceSpec::uni(1), 0, 1), std::out_of_range);
    CHECK(powWeight(3.0, -2.0) == doctest::Approx(1.0 / 9.0).epsilon(1e-15));
    CHECK(powWeight(5.0, 1.5) == doctest::Approx(std::pow(5.0, 1.5)).epsilon(1e-15));
  }

  TEST_CASE("inner products") {
    const Poly2 z1 = parseExpression("z1"), z2 = parseExpression("z2");
    for (double a : {0.0, 1.0, 2.5}) CHECK(innerProduct(z1, z2, SpaceSpec::iso(a)) == Complex(0, 0));
    CHECK(innerProduct(z1, z1, SpaceSpec::iso(2)) == Complex(4, 0));
    const Poly2 p = parseExpression("2 - z1 - z2");
    CHECK(innerProduct(p, p, SpaceSpec::iso(2)) == Complex(12, 0));
    const Poly2 f = parseExpression("i*z1 + 2"), g = parseExpression("z1 - i");
    const Complex fg = innerProduct(f, g, SpaceSpec::iso(1)), gf = innerProduct(g, f, SpaceSpec::iso(1));
    CHECK(std::abs(fg - std::conj(gf)) == 0.0);
    CHECK(fg == Complex(0, 4));  // z1 term: 2 * i * 1, constant: 1 * 2 * conj(-i)
  }

  TEST_CASE("norms") {
    CHECK(normSquared(parseExpression("1 - z1*z2"), SpaceSpec::iso(1.5)) ==
          doctest::Approx(1 + std::pow(3.0, 1.5)).epsilon(1e-14));
    CHECK(normSquared(parseExpression("1 - z1*z2"), SpaceSpec::iso(1.5)) == doctest::Approx(6.19615).epsilon(1e-6));
    for (double a : {-1.0, 0.3, 2.0}) CHECK(normSquared(parseExpression("z1"), SpaceSpec::iso(a)) == doctest::Approx(std::pow(2.0, a)));
    CHECK(normSquared(Poly2(), SpaceSpec::iso(2)) == 0.0);
    CHECK(normSquared(Poly1({1.0, -1.0}), SpaceSpec::uni(1)) == 3.0);
  }

  TEST_CASE("compareNorms examples") {
    const Poly2 f = parseExpression("z1*z2");
    auto t = compareNorms(f, 1);
    CHECK(t.iso == 3.0);
    CHECK(t.aniso == 4.0);
    CHECK(t.iso2x == 9.0);
    t = compareNorms(Poly2::constant(1.0), 2.7);
    CHECK(t.iso == 1.0);
    CHECK(t.aniso == 1.0);
    CHECK(t.iso2x == 1.0);
    t = compareNorms(f, -1);
    CHECK(t.iso == doctest::Approx(1.0 / 3).epsilon(1e-15));
    CHECK(t.aniso == 0.25);
    CHECK(t.iso2x == doctest::Approx(1.0 / 9).epsilon(1e-15));
  }

  TEST_CASE("inclusion orderings on random polynomials") {
    for (int t = 0; t < 500; ++t) {
      const Poly2 f = testing::randomPolyUpTo(10);
      for (double a : {0.5, 1.0, 2.0}) {
        const auto n = compareNorms(f, a);
        CHECK(n.iso <= n.aniso * (1 + 1e-12));
        CHECK(n.aniso <= n.iso2x * (1 + 1e-12));
      }
      for (double a : {-0.5, -1.0}) {
        const auto n = compareNorms(f, a);
        CHECK(n.iso >= n.aniso * (1 - 1e-12));
        CHECK(n.aniso >= n.iso2x * (1 - 1e-12));
      }
    }
  }

  TEST_CASE("Cauchy-Schwarz and monomial orthogonality") {
    for (int t = 0; t < 200; ++t) {
      const Poly2 f = testing::randomPolyUpTo(6), g = testing::randomPolyUpTo(6);
      const SpaceSpec s = (t % 2) ? SpaceSpec::iso(1.3) : SpaceSpec::aniso(-0.7);
      const double lhs = std::norm(innerProduct(f, g, s));
      const double rhs = normSquared(f, s) * normSquared(g, s);
      CHECK(lhs <= rhs * (1 + 1e-10));
    }
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c)
          for (int d = 0; d < 4; ++d)
            if (a != c || b != d)
              CHECK(innerProduct(Poly2::monomial(a, b), Poly2::monomial(c, d), SpaceSpec::iso(1.7)) == Complex(0, 0));
  }
}
