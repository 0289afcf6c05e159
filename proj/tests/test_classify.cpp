#include "doctest.h"
#include "support.hpp"

#include "dircyc/classify.hpp"
#include "dircyc/errors.hpp"
#include "dircyc/expression.hpp"
#include "dircyc/operators.hpp"

using namespace dircyc;

namespace {

Poly2 P(const char* s) { return parseExpression(s); }

Cyclicity predicted(const char* s, double alpha) {
  const Poly2 p = P(s);
  return predict(alpha, torusZeros(p), bidiskZeroSearch(p)).verdict;
}

}  // namespace

TEST_SUITE("classify") {
  TEST_CASE("prediction examples") {
    CHECK(predicted("2 - z1 - z2", 1.5) == Cyclicity::Cyclic);
    CHECK(predicted("2 - z1 - z2", 3) == Cyclicity::NotCyclic);
    CHECK(predicted("1 - z1*z2", 1.5) == Cyclicity::NotCyclic);
    CHECK(predicted("z1 - 2", 5) == Cyclicity::Cyclic);
    CHECK(predicted("z1 - 0.5", 0.5) == Cyclicity::NotCyclic);
    CHECK(predicted("1 - z1*z2", 1) == Cyclicity::Cyclic);
    CHECK(predicted("2 - z1 - z2", 2) == Cyclicity::Cyclic);
  }

  TEST_CASE("inconclusive bidisk search is not applicable") {
    BidiskZeroReport b;
    b.inconclusive = true;
    const auto p = predict(0.5, TorusZeroClass{}, b);
    CHECK(p.verdict == Cyclicity::NotApplicable);
    CHECK_FALSE(p.reason.empty());
  }

  TEST_CASE("product rule") {
    using C = Cyclicity;
    CHECK(productRule(std::vector{C::Cyclic, C::Cyclic}) == C::Cyclic);
    CHECK(productRule(std::vector{C::Cyclic, C::NotCyclic}) == C::NotCyclic);
    CHECK(productRule(std::vector{C::Cyclic}) == C::Cyclic);
    CHECK(productRule(std::vector{C::NotApplicable, C::NotCyclic}) == C::NotCyclic);
    CHECK(productRule(std::vector{C::NotApplicable, C::Cyclic}) == C::NotApplicable);
    CHECK_THROWS_AS(productRule(std::vector<C>{}), std::invalid_argument);
  }

  TEST_CASE("prediction is monotone in alpha and rotation invariant") {
    const std::vector<double> alphas{-1, 0, 0.5, 1, 1.2, 1.5, 2, 2.5, 3, 5};
    for (const char* s : {"2 - z1 - z2", "1 - z1*z2", "z1 - 2", "z1 - 1", "3 - z1 - z2 - z1*z2"}) {
      const Poly2 p = P(s);
      const auto torus = torusZeros(p);
      const auto bidisk = bidiskZeroSearch(p);
      const Poly2 r = rotate(p, std::polar(1.0, 1.1), std::polar(1.0, -0.4));
      const auto rt = torusZeros(r);
      const auto rb = bidiskZeroSearch(r);
      for (std::size_t i = 0; i < alphas.size(); ++i) {
        const auto v = predict(alphas[i], torus, bidisk).verdict;
        CHECK(v == predict(alphas[i], rt, rb).verdict);
        if (v == Cyclicity::Cyclic)
          for (std::size_t j = 0; j < i; ++j) CHECK(predict(alphas[j], torus, bidisk).verdict == Cyclicity::Cyclic);
      }
    }
  }

  TEST_CASE("corroborate: univariate plateau") {
    CorroborateOptions o;
    o.nMax = 50;
    const auto r = corroborate(P("1 - z1"), 2, o);
    CHECK(r.predicted.verdict == Cyclicity::NotCyclic);
    REQUIRE(r.torusClass);
    CHECK(r.torusClass->tag == TorusTag::Infinite);
    REQUIRE(r.empirical);
    CHECK(r.empirical->label == DecayLabel::Plateau);
    CHECK(r.empirical->limitEstimate == doctest::Approx(0.6079).epsilon(0.02));
    REQUIRE(r.consistent);
    CHECK(*r.consistent);
    CHECK_FALSE(r.certificate);
  }

  TEST_CASE("corroborate: certificate") {
    const auto r = corroborate(P("2 - z1 - z2"), 3);
    CHECK(r.predicted.verdict == Cyclicity::NotCyclic);
    REQUIRE(r.certificate);
    CHECK(*r.certificate == doctest::Approx(0.779697).epsilon(1e-6));
    CHECK(r.distances.size() == 41);
    for (const auto& d : r.distances) CHECK(d.distance >= *r.certificate - 1e-6);
    REQUIRE(r.consistent);
    CHECK(*r.consistent);
  }

  TEST_CASE("corroborate: diagonal family decays at alpha = 1") {
    CorroborateOptions o;
    o.nMax = 200;
    o.basis = BasisShape::DiagonalOnly;
    const auto r = corroborate(P("1 - z1*z2"), 1, o);
    CHECK(r.predicted.verdict == Cyclicity::Cyclic);
    REQUIRE(r.empirical);
    CHECK(r.empirical->label == DecayLabel::Decaying);
    CHECK(*r.consistent);
  }

  TEST_CASE("corroborate with factors") {
    CorroborateOptions o;
    o.nMax = 20;
    const std::vector<Poly2> f{P("z1 - 2"), P("3 - z1 - z2")};
    auto r = corroborate(f, 3, o);
    CHECK(r.predicted.verdict == Cyclicity::Cyclic);
    CHECK(r.factors.size() == 2);
    CHECK(r.polynomial == P("(z1 - 2)*(3 - z1 - z2)"));

    const std::vector<Poly2> g{P("z1 - 2"), P("2 - z1 - z2")};
    r = corroborate(g, 3, o);
    CHECK(r.predicted.verdict == Cyclicity::NotCyclic);
    REQUIRE(r.certificate);
    CHECK_THROWS_AS(corroborate(std::vector<Poly2>{}, 1.0, o), std::invalid_argument);
  }

  TEST_CASE("constant and zero inputs") {
    CorroborateOptions o;
    o.nMax = 10;
    const auto r = corroborate(Poly2::constant(2.0), 3, o);
    CHECK(r.predicted.verdict == Cyclicity::Cyclic);
    CHECK(r.distances.back().distanceSquared < 1e-12);
    CHECK_THROWS_AS(corroborate(Poly2(), 1.0, o), DomainError);
  }

  TEST_CASE("consistency rule") {
    CHECK(*consistency(Cyclicity::Cyclic, DecayLabel::Decaying));
    CHECK(*consistency(Cyclicity::Cyclic, DecayLabel::Inconclusive));
    CHECK_FALSE(*consistency(Cyclicity::Cyclic, DecayLabel::Plateau));
    CHECK(*consistency(Cyclicity::NotCyclic, DecayLabel::Plateau));
    CHECK_FALSE(*consistency(Cyclicity::NotCyclic, DecayLabel::Decaying));
    CHECK_FALSE(consistency(Cyclicity::NotApplicable, DecayLabel::Plateau).has_value());
  }

  TEST_CASE("report invariants are enforced") {
    ClassificationReport r;
    r.bidiskCheck.zeroFound = true;
    r.predicted.verdict = Cyclicity::Cyclic;
    CHECK_THROWS_AS(checkReport(r), NumericalFailure);
    r.predicted.verdict = Cyclicity::NotCyclic;
    CHECK_NOTHROW(checkReport(r));
    r.certificate = 0.8;
    r.distances.push_back({0, 1, 0.5, std::sqrt(0.5)});
    CHECK_THROWS_AS(checkReport(r), NumericalFailure);
  }
}
