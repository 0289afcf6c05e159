#include "dircyc/zeroset.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dircyc/errors.hpp"
#include "dircyc/operators.hpp"
#include "dircyc/resultant.hpp"

namespace dircyc {

namespace {

// Divides out the largest monomial z1^a z2^b that divides p. Monomials have
// no torus zeros, and afterwards reflect() keeps the full bidegree.
Poly2 stripMonomialFactor(const Poly2& p) {
  int a = p.degZ1(), b = p.degZ2();
  p.forEachNonzero([&](int k, int l, Complex) {
    a = std::min(a, k);
    b = std::min(b, l);
  });
  if (a == 0 && b == 0) return p;
  const int m = p.degZ1() - a, n = p.degZ2() - b;
  std::vector<Complex> g((m + 1) * (n + 1));
  p.forEachNonzero([&](int k, int l, Complex c) { g[(k - a) * (n + 1) + (l - b)] = c; });
  return Poly2(m, n, std::move(g));
}

Poly1 column(const Poly2& p, bool z1) {
  std::vector<Complex> c(z1 ? p.degZ1() + 1 : p.degZ2() + 1);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const int j = static_cast<int>(i);
    c[i] = z1 ? p.coeff(j, 0) : p.coeff(0, j);
  }
  return Poly1(std::move(c));
}

// Unimodular coordinates: parts below this are rounding noise from the root finder.
constexpr double kSnap = 1e-14;

Complex snap(Complex z) {
  return {std::abs(z.real()) < kSnap ? 0.0 : z.real(), std::abs(z.imag()) < kSnap ? 0.0 : z.imag()};
}

void addPoint(std::vector<Point2>& pts, Point2 q, double mergeTol) {
  q = {snap(q.z1), snap(q.z2)};
  for (const Point2& r : pts)
    if (std::abs(r.z1 - q.z1) <= mergeTol && std::abs(r.z2 - q.z2) <= mergeTol) return;
  pts.push_back(q);
}

}  // namespace

double torusGridMinimum(const Poly2& p, int gridSize) {
  if (gridSize < 1) throw std::invalid_argument("torus grid needs at least one point");
  std::vector<Complex> w(gridSize);
  for (int a = 0; a < gridSize; ++a) w[a] = std::polar(1.0, 2.0 * std::numbers::pi * a / gridSize);
  double best = INFINITY;
  for (Complex z1 : w)
    for (Complex z2 : w) best = std::min(best, std::abs(p.evaluate(z1, z2)));
  return best;
}

const char* toString(TorusTag tag) {
  switch (tag) {
    case TorusTag::Empty: return "empty";
    case TorusTag::Finite: return "finite";
    case TorusTag::Infinite: return "infinite";
  }
  return "?";
}

TorusZeroClass torusZeros(const Poly2& input, const ZeroTolerances& tol) {
  if (input.isConstant()) throw DomainError("torus zero set of a constant polynomial");
  const Poly2 p = stripMonomialFactor(input);
  TorusZeroClass out;
  if (p.isConstant()) return out;

  if (p.degZ1() == 0 || p.degZ2() == 0) {
    const bool inZ1 = p.degZ2() == 0;
    auto roots = rootsOnUnitCircle(column(p, inZ1), tol.circleTol, tol.roots);
    if (!roots.empty()) {
      out.tag = TorusTag::Infinite;
      out.witness = UnivariateCircleRoots{inZ1 ? 1 : 2, std::move(roots)};
    }
    return out;
  }

  const Poly2 pr = reflect(p);
  if (auto lambda = proportional(pr, p, tol.proportionalTol)) {
    out.tag = TorusTag::Infinite;
    out.witness = ProportionalReflection{*lambda};
    return out;
  }

  const Poly1 res = resultantZ2(p, pr);
  const double threshold = resultantZeroThreshold(p, pr, tol.resultantRelTol);
  const double maxCoeff = res.maxAbsCoeff();
  if (maxCoeff <= threshold) {
    out.tag = TorusTag::Infinite;
    out.witness = VanishingResultant{maxCoeff, threshold};
    return out;
  }
  if (maxCoeff <= tol.inconclusiveBand * threshold)
    throw InconclusiveError("resultant is within the inconclusive band of its zero threshold");

  const Poly1 r = chop(res, tol.chopTol * maxCoeff);
  if (r.degree() == 0) return out;

  const double residLimit = tol.residTol * p.coeffNorm();
  for (Complex rho : rootsOnUnitCircle(r, tol.circleTol, tol.roots)) {
    const Poly1 s0 = slice(p, {SliceVariable::FixZ1, rho});
    const Poly1 s = chop(s0, 1e-13 * std::max(s0.maxAbsCoeff(), p.maxAbsCoeff()));
    if (s.isZero()) {
      // p vanishes on {rho} x T.
      out.tag = TorusTag::Infinite;
      out.points.clear();
      out.witness = UnivariateCircleRoots{1, {rho}};
      return out;
    }
    if (s.degree() == 0) continue;
    for (Complex sigma : rootsOnUnitCircle(s, tol.circleTol, tol.roots))
      if (std::abs(p.evaluate(rho, sigma)) <= residLimit) addPoint(out.points, {rho, sigma}, tol.mergeTol);
  }
  if (!out.points.empty()) {
    out.tag = TorusTag::Finite;
    return out;
  }
  // Repeated factors give R roots of high multiplicity that double precision
  // cannot resolve; a vanishing grid sample exposes a missed zero.
  if (torusGridMinimum(p, 64) <= 10.0 * residLimit)
    throw InconclusiveError("torus grid sample vanishes but no torus zero was resolved (repeated factor?)");
  return out;
}

// ---------------------------------------------------------------- bidisk

namespace {

struct Candidate {
  Complex z1, z2;
  double modulus;
};

Complex project(Complex z, double rmax) {
  const double r = std::abs(z);
  return r > rmax ? z * (rmax / r) : z;
}

// Partial derivatives of p at (z1, z2).
std::pair<Complex, Complex> gradient(const Poly2& p, Complex z1, Complex z2) {
  Complex d1{}, d2{};
  for (int k = p.degZ1(); k >= 0; --k) {
    Complex row{}, drow{};
    for (int l = p.degZ2(); l >= 0; --l) {
      row = row * z2 + p.coeff(k, l);
      if (l > 0) drow = drow * z2 + static_cast<double>(l) * p.coeff(k, l);
    }
    if (k > 0) d1 = d1 * z1 + static_cast<double>(k) * row;
    d2 = d2 * z1 + drow;
  }
  return {d1, d2};
}

Candidate refine(const Poly2& p, Candidate c, double rmax, int iterations, double target) {
  for (int it = 0; it < iterations && c.modulus > target; ++it) {
    const Complex v = p.evaluate(c.z1, c.z2);
    const auto [g1, g2] = gradient(p, c.z1, c.z2);
    const double gn = std::norm(g1) + std::norm(g2);
    if (!(gn > 0.0)) break;
    const Complex scale = -v / gn;
    const Complex s1 = scale * std::conj(g1), s2 = scale * std::conj(g2);
    double t = 1.0;
    bool improved = false;
    for (int h = 0; h < 40; ++h, t *= 0.5) {
      const Complex w1 = project(c.z1 + t * s1, rmax), w2 = project(c.z2 + t * s2, rmax);
      const double m = std::abs(p.evaluate(w1, w2));
      if (m < c.modulus) {
        c = {w1, w2, m};
        improved = true;
        break;
      }
    }
    if (!improved) break;
  }
  return c;
}

}  // namespace

BidiskZeroReport bidiskZeroSearch(const Poly2& p, const BidiskGridConfig& grid) {
  if (grid.delta <= 0.0 || grid.delta >= 1.0 || grid.radii < 1 || grid.angles < 1 || grid.coarseFactor < 1 ||
      grid.candidates < 1)
    throw std::invalid_argument("invalid bidisk grid configuration");
  const double rmax = 1.0 - grid.delta;
  const int nr = std::max(1, grid.radii / grid.coarseFactor);
  const int na = std::max(1, grid.angles / grid.coarseFactor);

  std::vector<Complex> pts;
  pts.reserve(static_cast<std::size_t>(nr) * na + 1);
  pts.push_back(0.0);
  for (int i = 1; i <= nr; ++i) {
    const double r = rmax * i / nr;
    for (int j = 0; j < na; ++j) pts.push_back(std::polar(r, 2.0 * std::numbers::pi * j / na));
  }

  // Per z1 sample keep the best z2; the pool of row minima keeps candidates spread out.
  std::vector<Candidate> rowBest;
  rowBest.reserve(pts.size());
  const int n = p.degZ2();
  std::vector<Complex> cz2(n + 1);
  for (Complex z1 : pts) {
    for (int l = 0; l <= n; ++l) {
      Complex acc{};
      for (int k = p.degZ1(); k >= 0; --k) acc = acc * z1 + p.coeff(k, l);
      cz2[l] = acc;
    }
    Candidate best{z1, 0.0, INFINITY};
    for (Complex z2 : pts) {
      Complex acc{};
      for (int l = n; l >= 0; --l) acc = acc * z2 + cz2[l];
      const double m = std::abs(acc);
      if (m < best.modulus) best = {z1, z2, m};
    }
    rowBest.push_back(best);
  }
  const std::size_t keep = std::min<std::size_t>(grid.candidates, rowBest.size());
  std::partial_sort(rowBest.begin(), rowBest.begin() + keep, rowBest.end(),
                    [](const Candidate& a, const Candidate& b) { return a.modulus < b.modulus; });

  const double norm = p.coeffNorm();
  const double target = grid.residTol * norm;
  Candidate best = rowBest.front();
  for (std::size_t i = 0; i < keep; ++i) {
    const Candidate c = refine(p, rowBest[i], rmax, grid.newtonIterations, 1e-3 * target);
    if (c.modulus < best.modulus) best = c;
  }

  BidiskZeroReport report;
  report.grid = grid;
  report.point = {best.z1, best.z2};
  report.modulus = best.modulus;
  // Near a high-order torus zero |p| is tiny at the radius limit without any
  // zero nearby; the Newton distance estimate |p| / |grad p| tells them apart.
  const auto [g1, g2] = gradient(p, best.z1, best.z2);
  const double grad = std::sqrt(std::norm(g1) + std::norm(g2));
  report.zeroFound = best.modulus == 0.0 || (best.modulus <= target && best.modulus <= grid.residTol * grad);
  const bool interior = std::max(std::abs(best.z1), std::abs(best.z2)) < rmax * (1.0 - 1e-6);
  report.inconclusive = !report.zeroFound && interior && best.modulus < std::sqrt(grid.residTol) * norm;
  return report;
}

}  // namespace dircyc
