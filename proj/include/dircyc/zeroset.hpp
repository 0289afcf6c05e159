#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "dircyc/poly.hpp"
#include "dircyc/roots.hpp"

namespace dircyc {

struct Point2 {
  Complex z1;
  Complex z2;
};

struct ZeroTolerances {
  double circleTol = 1e-6;
  double residTol = 1e-8;
  double proportionalTol = 1e-9;
  double resultantRelTol = 1e-8;
  /// A resultant whose largest coefficient lies within this factor of the
  /// zero threshold is too close to call.
  double inconclusiveBand = 10.0;
  /// Resultant coefficients below this fraction of the largest are interpolation noise.
  double chopTol = 1e-12;
  /// Distinct torus points closer than this are merged.
  double mergeTol = 1e-6;
  RootFinderOptions roots;
};

/// p and its reflection are proportional: p = lambda * reflect(p).
struct ProportionalReflection {
  Complex lambda;
};
/// Res_{z2}(p, reflect(p)) is numerically identically zero.
struct VanishingResultant {
  double maxCoefficient;
  double threshold;
};
/// p depends on one variable only and has these roots on the unit circle;
/// the zero set contains {root} x T (variable 1) or T x {root} (variable 2).
struct UnivariateCircleRoots {
  int variable;
  std::vector<Complex> roots;
};
using InfiniteWitness = std::variant<ProportionalReflection, VanishingResultant, UnivariateCircleRoots>;

enum class TorusTag { Empty, Finite, Infinite };

/// Z(p) intersected with the torus: Empty, Finite(points) or Infinite(witness).
struct TorusZeroClass {
  TorusTag tag = TorusTag::Empty;
  std::vector<Point2> points;             ///< Finite only
  std::optional<InfiniteWitness> witness;  ///< Infinite only
};

/// Classifies the torus zero set of a nonconstant p.
///
/// One-variable p are solved directly. Otherwise a p proportional to its
/// reflection is Infinite; else the resultant R = Res_{z2}(p, reflect(p)) is
/// formed, and R == 0 means Infinite. Torus zeros are common zeros of p and
/// its reflection, so the remaining candidates are unit-circle roots rho of R
/// paired with unit-circle roots of p(rho, .).
///
/// Throws DomainError for constant p. Throws InconclusiveError when R sits
/// within the inconclusive band of its zero threshold, or when an Empty verdict
/// is contradicted by a vanishing sample on a 64 x 64 torus grid.
TorusZeroClass torusZeros(const Poly2& p, const ZeroTolerances& tol = {});

/// min |p| over the gridSize x gridSize grid of roots of unity on the torus.
double torusGridMinimum(const Poly2& p, int gridSize);

struct BidiskGridConfig {
  double delta = 1e-3;   ///< radii run over [0, 1 - delta]
  int radii = 64;        ///< per variable
  int angles = 256;      ///< per variable
  int coarseFactor = 4;  ///< the scan uses radii/coarseFactor x angles/coarseFactor per variable
  int candidates = 12;   ///< scan minima refined by Newton
  int newtonIterations = 80;
  double residTol = 1e-8;
};

/// Heuristic search for a zero in the closed polydisk of radius 1 - delta.
struct BidiskZeroReport {
  bool zeroFound = false;
  Point2 point;         ///< zero, or the best minimizer found
  double modulus = 0;   ///< |p(point)|
  /// No zero certified, yet an interior point came within sqrt(residTol) * |p|
  /// of vanishing: the resolution is insufficient to decide.
  bool inconclusive = false;
  BidiskGridConfig grid;
};

/// Scans |p| on a polar product grid, refines the best cells by damped
/// Gauss-Newton, and reports a zero when |p| <= residTol * coeffNorm(p) and
/// the Newton distance estimate |p| / |grad p| is below residTol.
BidiskZeroReport bidiskZeroSearch(const Poly2& p, const BidiskGridConfig& grid = {});

const char* toString(TorusTag tag);

}  // namespace dircyc
