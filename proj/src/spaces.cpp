#include "dircyc/spaces.hpp"

#include <cmath>
#include <stdexcept>

namespace dircyc {

double powWeight(double base, double alpha) {
  if (alpha == std::trunc(alpha) && std::abs(alpha) <= 8) {
    double r = 1.0;
    for (int i = 0; i < static_cast<int>(std::abs(alpha)); ++i) r *= base;
    return alpha < 0 ? 1.0 / r : r;
  }
  return std::exp(alpha * std::log(base));
}

double weight(const SpaceSpec& space, int k, int l) {
  switch (space.kind) {
    case SpaceKind::Iso:
      return powWeight(k + l + 1.0, space.alpha);
    case SpaceKind::Aniso:
      return powWeight(k + 1.0, space.alpha) * powWeight(l + 1.0, space.alpha);
    case SpaceKind::Uni:
      if (l != 0) throw std::out_of_range("univariate space has no z2 index");
      return powWeight(k + 1.0, space.alpha);
  }
  return 1.0;
}

WeightTable::WeightTable(const SpaceSpec& space, int maxK, int maxL) : maxK_(maxK), maxL_(maxL) {
  if (space.kind == SpaceKind::Uni && maxL > 0) throw std::out_of_range("univariate space has no z2 index");
  w_.resize(static_cast<std::size_t>(maxK + 1) * (maxL + 1));
  // Weights only depend on k + l (Iso) or factor over k and l (Aniso); tabulate the 1-D pieces.
  std::vector<double> line(static_cast<std::size_t>(maxK + maxL) + 2);
  for (std::size_t j = 0; j < line.size(); ++j) line[j] = powWeight(j + 1.0, space.alpha);
  for (int k = 0; k <= maxK; ++k)
    for (int l = 0; l <= maxL; ++l) {
      double w = 1.0;
      switch (space.kind) {
        case SpaceKind::Iso: w = line[k + l]; break;
        case SpaceKind::Aniso: w = line[k] * line[l]; break;
        case SpaceKind::Uni: w = line[k]; break;
      }
      w_[static_cast<std::size_t>(k) * (maxL + 1) + l] = w;
    }
}

Complex innerProduct(const Poly2& f, const Poly2& g, const SpaceSpec& space) {
  if (space.kind == SpaceKind::Uni && (f.degZ2() > 0 || g.degZ2() > 0))
    throw std::out_of_range("univariate space has no z2 index");
  Complex acc{};
  f.forEachNonzero([&](int k, int l, Complex a) {
    const Complex b = g.coeff(k, l);
    if (b != Complex{}) acc += weight(space, k, l) * a * std::conj(b);
  });
  return acc;
}

double normSquared(const Poly2& f, const SpaceSpec& space) {
  if (space.kind == SpaceKind::Uni && f.degZ2() > 0) throw std::out_of_range("univariate space has no z2 index");
  double acc = 0;
  f.forEachNonzero([&](int k, int l, Complex a) { acc += weight(space, k, l) * std::norm(a); });
  return acc;
}

Complex innerProduct(const Poly1& f, const Poly1& g, const SpaceSpec& space) {
  return innerProduct(liftZ1(f), liftZ1(g), space);
}

double normSquared(const Poly1& f, const SpaceSpec& space) { return normSquared(liftZ1(f), space); }

NormTriple compareNorms(const Poly2& f, double alpha) {
  return {normSquared(f, SpaceSpec::iso(alpha)), normSquared(f, SpaceSpec::aniso(alpha)),
          normSquared(f, SpaceSpec::iso(2 * alpha))};
}

}  // namespace dircyc
