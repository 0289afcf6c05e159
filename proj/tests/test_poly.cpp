#include "doctest.h"
#include "support.hpp"

#include "dircyc/errors.hpp"
#include "dircyc/expression.hpp"
#include "dircyc/poly.hpp"

using namespace dircyc;
using testing::randomPoly;

namespace {

Poly2 P(const char* s) { return parseExpression(s); }

double relDiff(const Poly2& a, const Poly2& b) {
  return maxCoeffDiff(a, b) / std::max({1.0, a.maxAbsCoeff(), b.maxAbsCoeff()});
}

}  // namespace

TEST_SUITE("poly-core") {
  TEST_CASE("bidegree is tight") {
    const Poly2 p(2, 2, {1, 0, 0, 0, 3, 0, 0, 0, 0});
    CHECK(p.degZ1() == 1);
    CHECK(p.degZ2() == 1);
    CHECK(p.grid().size() == 4);
    CHECK(Poly2().isZero());
    CHECK(Poly2(1, 1, {0, 0, 0, 0}).isZero());
    CHECK_THROWS_AS(Poly2(0, 0, {Complex(NAN, 0)}), std::invalid_argument);
  }

  TEST_CASE("add") {
    CHECK(P("2 - z1") + P("z1 - z2") == P("2 - z2"));
    const Poly2 p = P("3 - z1*z2^2 + i*z2");
    CHECK(p + Poly2() == p);
    const Poly2 s = P("1 + i*z1") + P("1 - i*z1");
    CHECK(s == Poly2::constant(2.0));
    CHECK(s.degZ1() == 0);
  }

  TEST_CASE("mul") {
    CHECK(P("1 - z1*z2") * P("1 + z1*z2") == P("1 - z1^2*z2^2"));
    CHECK(P("z1") * P("2 - z1 - z2") == P("2*z1 - z1^2 - z1*z2"));
    CHECK(P("1 - z1") * P("1 - z2") == P("1 - z1 - z2 + z1*z2"));
    const Poly2 a = randomPoly(2, 3), b = randomPoly(1, 4);
    CHECK((a * b).degZ1() == 3);
    CHECK((a * b).degZ2() == 7);
  }

  TEST_CASE("evaluate") {
    CHECK(std::abs(P("2 - z1 - z2").evaluate(1, 1)) == 0.0);
    CHECK(std::abs(P("1 - z1*z2").evaluate(Complex(0, 1), Complex(0, -1))) == 0.0);
    CHECK(P("2 - z1 - z2").evaluate(0, 0) == Complex(2, 0));
  }

  TEST_CASE("proportional") {
    auto lambda = proportional(P("1 - z1*z2"), P("z1*z2 - 1"));
    REQUIRE(lambda);
    CHECK(std::abs(*lambda - Complex(-1, 0)) < 1e-14);
    CHECK_FALSE(proportional(P("2 - z1 - z2"), P("2*z1*z2 - z1 - z2")));
    const Poly2 p = randomPoly(3, 2);
    lambda = proportional(p, Complex(0, 3) * p);
    REQUIRE(lambda);
    CHECK(std::abs(*lambda - Complex(0, 3)) < 1e-12);
    CHECK_THROWS_AS(proportional(Poly2(), p), std::invalid_argument);
  }

  TEST_CASE("multiplication is commutative and associative") {
    for (int t = 0; t < 50; ++t) {
      const Poly2 a = testing::randomPolyUpTo(4), b = testing::randomPolyUpTo(4), c = testing::randomPolyUpTo(4);
      CHECK(relDiff(a * b, b * a) <= 1e-12);
      CHECK(relDiff((a * b) * c, a * (b * c)) <= 1e-12);
    }
  }

  TEST_CASE("evaluation is multiplicative") {
    const Poly2 a = randomPoly(3, 4), b = randomPoly(5, 2), ab = a * b;
    for (int t = 0; t < 100; ++t) {
      const Complex z1 = testing::randomInDisk(), z2 = testing::randomInDisk();
      const Complex lhs = ab.evaluate(z1, z2), rhs = a.evaluate(z1, z2) * b.evaluate(z1, z2);
      CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(rhs)));
    }
  }

  TEST_CASE("pow by squaring matches repeated products") {
    const Poly2 p = P("2 - z1 - z2");
    Poly2 q = Poly2::constant(1.0);
    for (int k = 0; k < 7; ++k) {
      CHECK(relDiff(pow(p, k), q) == 0.0);
      q = q * p;
    }
  }
}

TEST_SUITE("poly-core") {
  TEST_CASE("parse examples") {
    const Poly2 p = P("2 - z1 - z2");
    CHECK(p.coeff(0, 0) == Complex(2, 0));
    CHECK(p.coeff(1, 0) == Complex(-1, 0));
    CHECK(p.coeff(0, 1) == Complex(-1, 0));
    CHECK(p.coeff(1, 1) == Complex(0, 0));

    const Poly2 q = P("(1 - z1*z2)^2");
    CHECK(q == Poly2(2, 2, {1, 0, 0, 0, -2, 0, 0, 0, 1}));

    const Poly2 r = P("i*z1");
    CHECK(r.coeff(1, 0) == Complex(0, 1));
    CHECK(r.coeff(0, 0) == Complex(0, 0));
  }

  TEST_CASE("parse details") {
    CHECK(P("z") == P("z1"));
    CHECK(P("2z1z2") == P("2*z1*z2"));
    CHECK(P("-z1^2") == -P("z1^2"));
    CHECK(P("(z1)(z2)") == P("z1*z2"));
    CHECK(P("1.5e1 - .5") == Poly2::constant(14.5));
    CHECK(P("z1^0") == Poly2::constant(1.0));
    CHECK(P("  2 -  - z2") == P("2 + z2"));
  }

  TEST_CASE("parse errors carry positions") {
    try {
      P("2 - z3");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.position() == 4);
    }
    CHECK_THROWS_AS(P("(1 + z1"), ParseError);
    CHECK_THROWS_AS(P("1 +"), ParseError);
    CHECK_THROWS_AS(P("z1^"), ParseError);
    CHECK_THROWS_AS(P("z1 ^ -2"), ParseError);
    CHECK_THROWS_AS(P(""), ParseError);
    CHECK_THROWS_AS(P("2 $ z1"), ParseError);
    CHECK_THROWS_AS(parseExpression("z1^600"), DegreeOverflowError);
    CHECK_THROWS_AS(parseExpression("(z1*z2)^3", 2), DegreeOverflowError);
    CHECK_THROWS_AS(parseExpression("z1^99999999999999999999"), ParseError);
  }

  TEST_CASE("format then parse is the identity on coefficient grids") {
    for (int t = 0; t < 30; ++t) {
      const Poly2 p = testing::randomPolyUpTo(5);
      CHECK(parseExpression(formatExpression(p)) == p);
    }
    CHECK(formatExpression(Poly2()) == "0");
    CHECK(parseExpression(formatExpression(P("2 - z1 - z2"))) == P("2 - z1 - z2"));
  }
}
