#include "dircyc/prooflab.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dircyc/errors.hpp"
#include "dircyc/fft.hpp"
#include "dircyc/spaces.hpp"

namespace dircyc {

RecurrenceResidualGrid recurrenceResiduals(const Poly2& g, int K, int L) {
  if (K < 0 || L < 0) throw std::invalid_argument("recurrence grid bounds must be nonnegative");
  auto b = [&](int k, int l) {
    const double w = static_cast<double>(k + l + 1);
    return w * w * g.coeff(k, l);
  };
  RecurrenceResidualGrid out{K, L, {}};
  out.residuals.resize(static_cast<std::size_t>(K + 1) * (L + 1));
  for (int k = 0; k <= K; ++k)
    for (int l = 0; l <= L; ++l)
      out.residuals[static_cast<std::size_t>(k) * (L + 1) + l] = 2.0 * b(k, l) - b(k + 1, l) - b(k, l + 1);
  return out;
}

Poly2 buildNumeratorG(std::span<const Point2> zeros, int N) {
  if (N < 1) throw DomainError("numerator exponent N must be at least 1");
  Poly2 g = Poly2::constant(1.0);
  for (const Point2& z : zeros) {
    const double r1 = std::abs(z.z1), r2 = std::abs(z.z2);
    if (std::abs(r1 - 1.0) > 1e-6 || std::abs(r2 - 1.0) > 1e-6)
      throw DomainError("numerator zeros must lie on the torus");
    const Complex a = std::conj(z.z1 / r1), b = std::conj(z.z2 / r2);
    const Poly2 factor(1, 1, {2.0, -b, -a, 0.0});
    g = g * pow(factor, N);
  }
  return g;
}

QExperimentReport qSmoothness(const Poly2& p, std::span<const Point2> zeros, int N, const QExperimentConfig& config) {
  if (p.isZero()) throw DomainError("Q experiment needs a nonzero p");
  if (N < 0) throw DomainError("numerator exponent N must be nonnegative");
  const int G = config.gridSize;
  const Poly2 g = (N == 0 || zeros.empty()) ? Poly2::constant(1.0) : buildNumeratorG(zeros, N);
  if (G < 4 || (G & (G - 1)) != 0) throw std::invalid_argument("gridSize must be a power of two >= 4");
  if (G < 4 * std::max({g.totalDegree(), p.degZ1(), p.degZ2()}))
    throw std::invalid_argument("gridSize must be at least 4 deg g");

  const double twoPi = 2.0 * std::numbers::pi;
  std::vector<Complex> roots(G);
  for (int a = 0; a < G; ++a) roots[a] = std::polar(1.0, twoPi * a / G);

  const double zeroLimit = config.residTol * p.coeffNorm();
  const double nearLimit = config.zeroRadius * twoPi / G;
  std::vector<Complex> q(static_cast<std::size_t>(G) * G);
  for (int a = 0; a < G; ++a)
    for (int b = 0; b < G; ++b) {
      const Complex z1 = roots[a], z2 = roots[b];
      const Complex pv = p.evaluate(z1, z2);
      Complex& out = q[static_cast<std::size_t>(a) * G + b];
      if (std::abs(pv) < zeroLimit) {
        const bool declared = std::ranges::any_of(zeros, [&](const Point2& z) {
          return std::abs(z.z1 - z1) <= nearLimit && std::abs(z.z2 - z2) <= nearLimit;
        });
        if (!declared) throw DomainError("p vanishes on the torus away from the declared zeros");
        out = 0.0;
      } else {
        out = g.evaluate(z1, z2) / pv;
      }
    }

  std::vector<Complex> qhat = dft2(q, G, G);
  const double scale = 1.0 / (static_cast<double>(G) * G);
  for (Complex& c : qhat) c *= scale;

  const int half = G / 2;
  auto at = [&](int k, int l) { return qhat[static_cast<std::size_t>(k) * G + l]; };

  QExperimentReport rep;
  rep.p = p;
  rep.torusZeros.assign(zeros.begin(), zeros.end());
  rep.N = N;
  rep.gridSize = G;
  rep.tailIndex = config.tailIndex > 0 ? config.tailIndex : G / 8;
  if (2 * rep.tailIndex >= half) throw std::invalid_argument("tailIndex must be below gridSize / 4");

  double total = 0, negative = 0;
  for (int k = 0; k < G; ++k)
    for (int l = 0; l < G; ++l) {
      const double e = std::norm(at(k, l));
      total += e;
      if (k >= half || l >= half) negative += e;
    }
  rep.negFreqEnergyFraction = total > 0 ? negative / total : 0.0;

  auto weightedSum = [&](int s) {
    double sum = 0;
    for (int k = 0; k <= s; ++k)
      for (int l = 0; l <= s; ++l) {
        const double w = static_cast<double>(k + 1) * (l + 1);
        sum += std::norm(at(k, l)) * w * w;
      }
    return sum;
  };
  const double s1 = weightedSum(rep.tailIndex);
  rep.weightedTailRatio = s1 > 0 ? weightedSum(2 * rep.tailIndex) / s1 : 0.0;

  std::vector<Complex> trunc(static_cast<std::size_t>(half) * half);
  rep.spectrum.resize(trunc.size());
  for (int k = 0; k < half; ++k)
    for (int l = 0; l < half; ++l) {
      trunc[static_cast<std::size_t>(k) * half + l] = at(k, l);
      rep.spectrum[static_cast<std::size_t>(k) * half + l] = std::abs(at(k, l));
    }
  const Poly2 qTrunc(half - 1, half - 1, std::move(trunc));
  const SpaceSpec d2 = SpaceSpec::iso(2.0);
  rep.reconstructionError = std::sqrt(normSquared(g - p * qTrunc, d2) / normSquared(g, d2));

  auto shellMax = [&](int d) {
    double m = 0;
    for (int k = 0; k <= d; ++k) m = std::max(m, std::abs(at(k, d - k)));
    return m;
  };
  const int hi = std::min(32, half - 1), lo = std::min(4, hi - 1);
  const double mLo = shellMax(lo), mHi = shellMax(hi);
  rep.geometricRate = (mLo > 0 && mHi > 0) ? std::pow(mHi / mLo, 1.0 / (hi - lo)) : 0.0;
  return rep;
}

}  // namespace dircyc
