#include "doctest.h"
#include "support.hpp"

#include <sstream>

#include "dircyc/expression.hpp"
#include "dircyc/serialize.hpp"

using namespace dircyc;

namespace {

Poly2 P(const char* s) { return parseExpression(s); }

// A value survives a write / read / write cycle when both documents agree.
template <class T>
void checkRoundTrip(const T& value) {
  const Json first = value;
  const T back = first.get<T>();
  const Json second = back;
  CHECK(first.dump() == second.dump());
}

}  // namespace

TEST_SUITE("serialize") {
  TEST_CASE("polynomial format") {
    const Json j = P("2 - z1 - z2");
    CHECK(j.at("bidegree") == Json::array({1, 1}));
    CHECK(j.at("coeffs").size() == 3);
    CHECK(j.at("coeffs")[0] == Json({{"k", 0}, {"l", 0}, {"re", 2.0}, {"im", 0.0}}));
    const Poly2 q = Json::parse(R"({"bidegree":[1,2],"coeffs":[{"k":1,"l":2,"re":1,"im":-1},{"k":0,"l":0,"re":3}]})").get<Poly2>();
    CHECK(q == Poly2(1, 2, {3.0, 0, 0, 0, 0, Complex(1, -1)}));
    CHECK_THROWS(Json::parse(R"({"bidegree":[0,0],"coeffs":[{"k":1,"l":0,"re":1}]})").get<Poly2>());
  }

  TEST_CASE("twelve significant digits") {
    CHECK(round12(1.0 / 3) == 0.333333333333);
    CHECK(round12(0.0) == 0.0);
    CHECK(std::signbit(round12(-0.0)) == false);
    const Json j = Complex(2.0 / 3) * P("z1");
    CHECK(j.dump().find("0.666666666667") != std::string::npos);
  }

  TEST_CASE("torus class documents") {
    const Json f = torusZeros(P("2 - z1 - z2"));
    CHECK(f.at("torus") == "finite");
    CHECK(f.at("points").size() == 1);
    const Json i = torusZeros(P("1 - z1*z2"));
    CHECK(i.at("torus") == "infinite");
    CHECK(i.at("witness") == "proportional_reflection");
    const Json e = torusZeros(P("z1 - 2"));
    CHECK(e == Json({{"torus", "empty"}}));
    const Json u = torusZeros(P("z1 - 1"));
    CHECK(u.at("witness") == "univariate_circle_root");
    const Json v = torusZeros(P("(z1 - 2)*(z1*z2 - 1)"));
    CHECK(v.at("witness") == "vanishing_resultant");
    for (const char* s : {"2 - z1 - z2", "1 - z1*z2", "z1 - 2", "z1 - 1", "(z1 - 2)*(z1*z2 - 1)"})
      checkRoundTrip(torusZeros(P(s)));
  }

  TEST_CASE("report round trips") {
    for (int t = 0; t < 10; ++t) checkRoundTrip(testing::randomPolyUpTo(4));
    checkRoundTrip(bidiskZeroSearch(P("z1 - 0.5")));
    checkRoundTrip(bidiskZeroSearch(P("2 - z1 - z2")));
    checkRoundTrip(optimalApproximant(P("2 - z1 - z2"), BasisSpec::totalDegree(3), SpaceSpec::iso(1)));
    checkRoundTrip(optimalApproximant(P("1 - z1*z2"), BasisSpec::biDegree(2, 1), SpaceSpec::aniso(1)));
    CorroborateOptions o;
    o.nMax = 12;
    checkRoundTrip(corroborate(P("2 - z1 - z2"), 3, o));
    checkRoundTrip(corroborate(P("z1 - 0.5"), 1, o));
    checkRoundTrip(corroborate(std::vector<Poly2>{P("z1 - 2"), P("1 - z1*z2")}, 1.5, o));
    const std::vector<Point2> zero{{1.0, 1.0}};
    QExperimentConfig q;
    q.gridSize = 64;
    checkRoundTrip(qSmoothness(P("2 - z1 - z2"), zero, 2, q));
  }

  TEST_CASE("typed fields survive parsing") {
    CorroborateOptions o;
    o.nMax = 12;
    const auto r = corroborate(P("2 - z1 - z2"), 3, o);
    const auto back = Json(r).get<ClassificationReport>();
    CHECK(back.polynomial == r.polynomial);
    CHECK(back.predicted.verdict == r.predicted.verdict);
    CHECK(back.torusClass->tag == TorusTag::Finite);
    CHECK(back.distances.size() == r.distances.size());
    CHECK(*back.certificate == doctest::Approx(*r.certificate).epsilon(1e-11));
    CHECK(back.empirical->label == r.empirical->label);
    CHECK(*back.consistent == *r.consistent);
  }

  TEST_CASE("CSV writers") {
    std::ostringstream s;
    const std::vector<ScanRow> rows{{1.5, {0, 1, 0.5, std::sqrt(0.5)}}};
    writeScanCsv(s, rows);
    CHECK(s.str() == "alpha,n,basis_size,distance_sq,distance\n1.5,0,1,0.5,0.707106781187\n");
    std::ostringstream r;
    writeRecurrenceCsv(r, recurrenceResiduals(Poly2::constant(1.0), 0, 1));
    CHECK(r.str() == "k,l,re,im\n0,0,2,0\n0,1,0,0\n");
  }
}
