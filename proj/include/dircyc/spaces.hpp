#pragma once

#include <vector>

#include "dircyc/poly.hpp"

namespace dircyc {

/// Which weighted sequence norm is in force.
///   Iso:   sum (k+l+1)^alpha |a_kl|^2          (isotropic Dirichlet-type space on the bidisk)
///   Aniso: sum (k+1)^alpha (l+1)^alpha |a_kl|^2
///   Uni:   sum (k+1)^alpha |a_k|^2            (one variable; l must be 0)
enum class SpaceKind { Iso, Aniso, Uni };

struct SpaceSpec {
  SpaceKind kind = SpaceKind::Iso;
  double alpha = 0.0;

  static SpaceSpec iso(double alpha) { return {SpaceKind::Iso, alpha}; }
  static SpaceSpec aniso(double alpha) { return {SpaceKind::Aniso, alpha}; }
  static SpaceSpec uni(double alpha) { return {SpaceKind::Uni, alpha}; }
};

/// base^alpha for base >= 1. Integer alpha in [-8, 8] uses repeated
/// multiplication so small cases stay exact.
double powWeight(double base, double alpha);

/// Weight of the monomial z1^k z2^l. Throws std::out_of_range for Uni with l > 0.
double weight(const SpaceSpec& space, int k, int l);

/// Precomputed weights for every (k, l) with k <= maxK, l <= maxL.
class WeightTable {
 public:
  WeightTable(const SpaceSpec& space, int maxK, int maxL);
  double operator()(int k, int l) const noexcept { return w_[static_cast<std::size_t>(k) * (maxL_ + 1) + l]; }
  int maxK() const noexcept { return maxK_; }
  int maxL() const noexcept { return maxL_; }

 private:
  int maxK_;
  int maxL_;
  std::vector<double> w_;
};

/// <f, g> = sum weight(k,l) f_kl conj(g_kl).
Complex innerProduct(const Poly2& f, const Poly2& g, const SpaceSpec& space);
double normSquared(const Poly2& f, const SpaceSpec& space);

Complex innerProduct(const Poly1& f, const Poly1& g, const SpaceSpec& space);
double normSquared(const Poly1& f, const SpaceSpec& space);

struct NormTriple {
  double iso;    ///< squared Iso norm at alpha
  double aniso;  ///< squared Aniso norm at alpha
  double iso2x;  ///< squared Iso norm at 2 alpha
};

/// For alpha >= 0 the triple is nondecreasing; for alpha <= 0 it is nonincreasing.
NormTriple compareNorms(const Poly2& f, double alpha);

}  // namespace dircyc
