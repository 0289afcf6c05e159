#pragma once

#include <Eigen/Dense>

#include <vector>

#include "dircyc/poly.hpp"
#include "dircyc/spaces.hpp"

namespace dircyc {

struct Monomial {
  int k = 0;
  int l = 0;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

enum class BasisShape { TotalDegree, BiDegree, DiagonalOnly };

/// Which polynomial multipliers p are allowed: all k+l <= n, all k <= n1 and
/// l <= n2, or the diagonal monomials (m, m) with m <= n.
struct BasisSpec {
  BasisShape shape = BasisShape::TotalDegree;
  int n1 = 0;
  int n2 = 0;

  static BasisSpec totalDegree(int n) { return {BasisShape::TotalDegree, n, n}; }
  static BasisSpec biDegree(int n1, int n2) { return {BasisShape::BiDegree, n1, n2}; }
  static BasisSpec diagonalOnly(int n) { return {BasisShape::DiagonalOnly, n, n}; }
  /// Member of the shape's one-parameter family (BiDegree uses (n, n)).
  static BasisSpec family(BasisShape shape, int n) { return {shape, n, n}; }
};

/// Basis monomials in graded-lexicographic order (by k + l, then k).
/// For TotalDegree and DiagonalOnly the basis for n is a prefix of the basis for n + 1.
std::vector<Monomial> basisMonomials(const BasisSpec& spec);

/// Normal equations for min_p |p f - 1|: G_ij = <e_j f, e_i f>, v_i = <1, e_i f>.
struct GramSystem {
  Poly2 f;
  SpaceSpec space;
  BasisSpec spec;
  std::vector<Monomial> basis;
  Eigen::MatrixXcd gram;
  Eigen::VectorXcd rhs;
};

GramSystem assembleGram(const Poly2& f, const BasisSpec& spec, const SpaceSpec& space);

struct SolverOptions {
  /// A pivot L_ii^2 at or below this fraction of trace(G) is a factorization failure.
  double pivotTol = 1e-12;
  /// max/min L_ii^2 above this switches to QR on the weighted coefficient matrix.
  double conditionLimit = 1e12;
  /// Allowed gap between the residual norm and 1 - Re(v^H c).
  double selfCheckTol = 1e-9;
};

struct ApproximantResult {
  Poly2 p;                 ///< optimal approximant
  double distanceSquared;  ///< |residual|^2, from the reconstructed residual
  Poly2 residual;          ///< p f - 1
  BasisSpec basis;
  double normalEquationDistanceSquared;  ///< 1 - Re(v^H c), kept for the self-check
  double pivotRatio;                      ///< max/min Cholesky pivot, 0 when unused
  bool usedQr;
};

/// Solves the Hermitian system by Cholesky (QR fallback for bad conditioning).
/// Throws NumericalFailure if G is not numerically positive definite or the
/// two distance routes disagree beyond selfCheckTol.
ApproximantResult solveNormalEquations(const GramSystem& system, const SolverOptions& options = {});

ApproximantResult optimalApproximant(const Poly2& f, const BasisSpec& spec, const SpaceSpec& space,
                                     const SolverOptions& options = {});

struct DistancePoint {
  int n;
  int basisSize;
  double distanceSquared;
  double distance;
};

/// dist(1, span{e f : e in basis(n)}) for n = 0..nMax. TotalDegree and
/// DiagonalOnly families reuse one factorization at nMax (nested bases share
/// leading Cholesky blocks); BiDegree solves each n separately.
std::vector<DistancePoint> distanceSequence(const Poly2& f, const SpaceSpec& space, int nMax,
                                            BasisShape family = BasisShape::TotalDegree,
                                            const SolverOptions& options = {});

enum class ClosedFormFamily { OneMinusZ1, OneMinusZ1Z2 };

/// Known distances in the Iso space:
///   1 - z1:    d_n^2 = 1 / sum_{j=0}^{n+1} (j+1)^-alpha     (basis degree n in z1)
///   1 - z1 z2: d_n^2 = 1 / sum_{m=0}^{n+1} (2m+1)^-alpha    (diagonal basis degree n)
double closedFormDistance(ClosedFormFamily family, double alpha, int n);

/// Lower bound on every d_n for any f vanishing at a torus point, alpha > 2:
/// 1 / sqrt(sum_{n>=0} (n+1)^{1-alpha}) = 1 / sqrt(zeta(alpha - 1)).
/// Throws DomainError for alpha <= 2.
double evaluationBoundCertificate(double alpha);

/// Same bound; checks that the supplied zero lies on the torus (|z_i| = 1 within 1e-9).
double evaluationBoundCertificate(double alpha, Complex z1, Complex z2);

}  // namespace dircyc
