#include "dircyc/approximant.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dircyc/errors.hpp"

namespace dircyc {

std::vector<Monomial> basisMonomials(const BasisSpec& spec) {
  if (spec.n1 < 0 || spec.n2 < 0) throw std::invalid_argument("basis bounds must be nonnegative");
  std::vector<Monomial> out;
  switch (spec.shape) {
    case BasisShape::TotalDegree:
      for (int d = 0; d <= spec.n1; ++d)
        for (int k = 0; k <= d; ++k) out.push_back({k, d - k});
      break;
    case BasisShape::BiDegree:
      for (int d = 0; d <= spec.n1 + spec.n2; ++d)
        for (int k = std::max(0, d - spec.n2); k <= std::min(d, spec.n1); ++k) out.push_back({k, d - k});
      break;
    case BasisShape::DiagonalOnly:
      for (int m = 0; m <= spec.n1; ++m) out.push_back({m, m});
      break;
  }
  return out;
}

namespace {

struct Term {
  int k;
  int l;
  Complex c;
};

std::vector<Term> support(const Poly2& f) {
  std::vector<Term> s;
  f.forEachNonzero([&](int k, int l, Complex c) { s.push_back({k, l, c}); });
  return s;
}

/// Dense lookup from monomial to basis position (-1 when absent).
class BasisIndex {
 public:
  explicit BasisIndex(const std::vector<Monomial>& basis) {
    for (const Monomial& b : basis) {
      maxK_ = std::max(maxK_, b.k);
      maxL_ = std::max(maxL_, b.l);
    }
    idx_.assign(static_cast<std::size_t>(maxK_ + 1) * (maxL_ + 1), -1);
    for (std::size_t i = 0; i < basis.size(); ++i) idx_[basis[i].k * (maxL_ + 1) + basis[i].l] = static_cast<int>(i);
  }
  int operator()(int k, int l) const {
    if (k < 0 || l < 0 || k > maxK_ || l > maxL_) return -1;
    return idx_[k * (maxL_ + 1) + l];
  }
  int maxK() const { return maxK_; }
  int maxL() const { return maxL_; }

 private:
  int maxK_ = 0;
  int maxL_ = 0;
  std::vector<int> idx_;
};

Poly2 assemble(const std::vector<Monomial>& basis, const Eigen::VectorXcd& c, int count) {
  int m = 0, n = 0;
  for (int i = 0; i < count; ++i) {
    m = std::max(m, basis[i].k);
    n = std::max(n, basis[i].l);
  }
  std::vector<Complex> g(static_cast<std::size_t>(m + 1) * (n + 1));
  for (int i = 0; i < count; ++i) g[basis[i].k * (n + 1) + basis[i].l] = c(i);
  return Poly2(m, n, std::move(g));
}

/// Finishes a solve: builds p and the residual and runs the distance self-check.
ApproximantResult finish(const GramSystem& sys, int count, const Eigen::VectorXcd& c, double neDistSq,
                         double pivotRatio, bool usedQr) {
  Poly2 p = assemble(sys.basis, c, count);
  Poly2 residual = p * sys.f - Poly2::constant(1.0);
  const double distSq = normSquared(residual, sys.space);
  BasisSpec spec = sys.spec;
  return {std::move(p), distSq, std::move(residual), spec, neDistSq, pivotRatio, usedQr};
}

ApproximantResult solveByQr(const GramSystem& sys, int count) {
  const std::vector<Term> terms = support(sys.f);
  int maxK = 0, maxL = 0;
  for (int i = 0; i < count; ++i) {
    maxK = std::max(maxK, sys.basis[i].k);
    maxL = std::max(maxL, sys.basis[i].l);
  }
  maxK += sys.f.degZ1();
  maxL += sys.f.degZ2();
  const WeightTable w(sys.space, maxK, maxL);
  std::vector<int> row(static_cast<std::size_t>(maxK + 1) * (maxL + 1), -1);
  int rows = 0;
  for (int i = 0; i < count; ++i)
    for (const Term& s : terms) {
      int& r = row[(sys.basis[i].k + s.k) * (maxL + 1) + sys.basis[i].l + s.l];
      if (r < 0) r = rows++;
    }
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(rows, count);
  Eigen::VectorXcd target = Eigen::VectorXcd::Zero(rows);
  for (int i = 0; i < count; ++i)
    for (const Term& s : terms) {
      const int k = sys.basis[i].k + s.k;
      const int l = sys.basis[i].l + s.l;
      a(row[k * (maxL + 1) + l], i) = std::sqrt(w(k, l)) * s.c;
    }
  if (row[0] >= 0) target(row[0]) = 1.0;
  Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(a);
  if (qr.rank() < count) throw NumericalFailure("weighted coefficient matrix is rank deficient");
  const Eigen::VectorXcd c = qr.solve(target);
  const double neDistSq = 1.0 - (sys.rhs.head(count).adjoint() * c)(0).real();
  return finish(sys, count, c, neDistSq, 0.0, true);
}

/// Cholesky of the full Gram matrix. Leading blocks serve every nested prefix.
class NestedCholesky {
 public:
  NestedCholesky(const GramSystem& sys, const SolverOptions& options) : sys_(sys), options_(options) {
    Eigen::LLT<Eigen::MatrixXcd> llt(sys.gram);
    ok_ = llt.info() == Eigen::Success;
    if (!ok_) return;
    l_ = llt.matrixL();
    y_ = l_.triangularView<Eigen::Lower>().solve(sys.rhs);
  }

  ApproximantResult solvePrefix(int count) const {
    if (!ok_) return fallback(count, 0.0, "Cholesky factorization failed");
    double trace = 0, maxPivot = 0, minPivot = INFINITY;
    for (int i = 0; i < count; ++i) {
      trace += sys_.gram(i, i).real();
      const double pivot = std::norm(l_(i, i));
      maxPivot = std::max(maxPivot, pivot);
      minPivot = std::min(minPivot, pivot);
    }
    if (!(minPivot > options_.pivotTol * trace))
      throw NumericalFailure("Gram matrix is not numerically positive definite");
    const double ratio = maxPivot / minPivot;
    if (ratio > options_.conditionLimit) return fallback(count, ratio, "");

    const Eigen::VectorXcd y = y_.head(count);
    const Eigen::VectorXcd c =
        l_.topLeftCorner(count, count).adjoint().triangularView<Eigen::Upper>().solve(y);
    ApproximantResult r = finish(sys_, count, c, 1.0 - y.squaredNorm(), ratio, false);
    if (std::abs(r.distanceSquared - r.normalEquationDistanceSquared) > options_.selfCheckTol)
      return fallback(count, ratio, "");
    return r;
  }

 private:
  ApproximantResult fallback(int count, double ratio, const char* why) const {
    ApproximantResult r = solveByQr(sys_, count);
    r.pivotRatio = ratio;
    if (std::abs(r.distanceSquared - r.normalEquationDistanceSquared) > options_.selfCheckTol)
      throw NumericalFailure(std::string("distance self-check failed after QR fallback") +
                             (*why ? std::string(" (") + why + ")" : std::string()));
    return r;
  }

  const GramSystem& sys_;
  SolverOptions options_;
  bool ok_ = false;
  Eigen::MatrixXcd l_;
  Eigen::VectorXcd y_;
};

}  // namespace

GramSystem assembleGram(const Poly2& f, const BasisSpec& spec, const SpaceSpec& space) {
  if (f.isZero()) throw DomainError("assembleGram: zero polynomial");
  GramSystem sys{f, space, spec, basisMonomials(spec), {}, {}};
  const BasisIndex index(sys.basis);
  const std::vector<Term> terms = support(f);
  const WeightTable w(space, index.maxK() + f.degZ1(), index.maxL() + f.degZ2());
  const int size = static_cast<int>(sys.basis.size());

  sys.gram = Eigen::MatrixXcd::Zero(size, size);
  for (int j = 0; j < size; ++j) {
    const Monomial bj = sys.basis[j];
    for (const Term& s : terms) {
      const int pk = bj.k + s.k;
      const int pl = bj.l + s.l;
      const double wp = w(pk, pl);
      for (const Term& t : terms) {
        const int i = index(pk - t.k, pl - t.l);
        if (i >= 0) sys.gram(i, j) += wp * s.c * std::conj(t.c);
      }
    }
  }
  sys.rhs = Eigen::VectorXcd::Zero(size);
  if (const int i0 = index(0, 0); i0 >= 0) sys.rhs(i0) = std::conj(f.coeff(0, 0));
  return sys;
}

ApproximantResult solveNormalEquations(const GramSystem& system, const SolverOptions& options) {
  NestedCholesky chol(system, options);
  return chol.solvePrefix(static_cast<int>(system.basis.size()));
}

ApproximantResult optimalApproximant(const Poly2& f, const BasisSpec& spec, const SpaceSpec& space,
                                     const SolverOptions& options) {
  return solveNormalEquations(assembleGram(f, spec, space), options);
}

std::vector<DistancePoint> distanceSequence(const Poly2& f, const SpaceSpec& space, int nMax, BasisShape family,
                                            const SolverOptions& options) {
  if (nMax < 0) throw std::invalid_argument("nMax must be nonnegative");
  std::vector<DistancePoint> out;
  auto push = [&](int n, int size, double d2) {
    out.push_back({n, size, d2, std::sqrt(std::max(d2, 0.0))});
  };
  if (family == BasisShape::BiDegree) {
    for (int n = 0; n <= nMax; ++n) {
      const GramSystem sys = assembleGram(f, BasisSpec::family(family, n), space);
      push(n, static_cast<int>(sys.basis.size()), solveNormalEquations(sys, options).distanceSquared);
    }
    return out;
  }
  const GramSystem sys = assembleGram(f, BasisSpec::family(family, nMax), space);
  const NestedCholesky chol(sys, options);
  for (int n = 0; n <= nMax; ++n) {
    const int size = static_cast<int>(basisMonomials(BasisSpec::family(family, n)).size());
    push(n, size, chol.solvePrefix(size).distanceSquared);
  }
  return out;
}

double closedFormDistance(ClosedFormFamily family, double alpha, int n) {
  if (n < 0) throw std::invalid_argument("closedFormDistance: n must be nonnegative");
  double sum = 0;
  for (int j = 0; j <= n + 1; ++j)
    sum += 1.0 / powWeight(family == ClosedFormFamily::OneMinusZ1 ? j + 1.0 : 2.0 * j + 1.0, alpha);
  return 1.0 / sum;
}

double evaluationBoundCertificate(double alpha) {
  if (!(alpha > 2)) throw DomainError("evaluation bound requires alpha > 2");
  return 1.0 / std::sqrt(std::riemann_zeta(alpha - 1.0));
}

double evaluationBoundCertificate(double alpha, Complex z1, Complex z2) {
  if (std::abs(std::abs(z1) - 1.0) > 1e-9 || std::abs(std::abs(z2) - 1.0) > 1e-9)
    throw DomainError("certificate point must lie on the torus");
  return evaluationBoundCertificate(alpha);
}

}  // namespace dircyc
