#pragma once

#include <span>
#include <vector>

#include "dircyc/zeroset.hpp"

namespace dircyc {

/// r_kl = 2 b_kl - b_{k+1,l} - b_{k,l+1} with b_kl = (k+l+1)^2 a_kl, for k <= K, l <= L.
/// Each r_kl is the D_2 inner product of g with z1^k z2^l (2 - z1 - z2).
struct RecurrenceResidualGrid {
  int K = 0;
  int L = 0;
  std::vector<Complex> residuals;  ///< row-major, (K+1) x (L+1)

  Complex operator()(int k, int l) const { return residuals[static_cast<std::size_t>(k) * (L + 1) + l]; }
};

/// Coefficients of g beyond the grid enter through the b_{K+1,l} and b_{k,L+1} terms;
/// anything farther out has no effect.
RecurrenceResidualGrid recurrenceResiduals(const Poly2& g, int K, int L);

/// prod_j (2 - conj(zeta_j) z1 - conj(eta_j) z2)^N over the given torus points.
/// Points must be unimodular within 1e-6 (they are normalized first), N >= 1;
/// otherwise DomainError. An empty list gives 1.
Poly2 buildNumeratorG(std::span<const Point2> zeros, int N);

struct QExperimentConfig {
  int gridSize = 512;       ///< power of two, at least 4 deg g
  double residTol = 1e-8;   ///< |p| below residTol * coeffNorm(p) counts as a zero of p
  /// Sample points within this many grid spacings of a declared zero may be zeros of p.
  double zeroRadius = 2.0;
  int tailIndex = 0;        ///< s in S_{2s}/S_s; 0 picks gridSize / 8
};

struct QExperimentReport {
  Poly2 p;
  std::vector<Point2> torusZeros;
  int N = 0;
  int gridSize = 0;
  int tailIndex = 0;
  double negFreqEnergyFraction = 0;
  /// S_{2s} / S_s with S_s = sum_{k,l <= s} |Qhat(k,l)|^2 (k+1)^2 (l+1)^2.
  double weightedTailRatio = 0;
  /// |g - p Q_trunc|_{D_2} / |g|_{D_2}, Q_trunc keeping indices below gridSize / 2.
  double reconstructionError = 0;
  /// (M_32 / M_4)^(1/28) for the shell maxima M_d = max_{k+l=d} |Qhat(k,l)|
  /// (shells shrink to fit grids below 128).
  double geometricRate = 0;
  /// |Qhat(k,l)| for 0 <= k, l < gridSize / 2, row-major in k. Not serialized.
  std::vector<double> spectrum;
};

/// Samples Q = g / p on the gridSize^2 grid of roots of unity, where
/// g = buildNumeratorG(zeros, N) (g = 1 when N = 0 or the list is empty), and
/// measures the smoothness of Q through its discrete Fourier coefficients.
/// Q is set to 0 where p vanishes at a declared zero; a vanishing p anywhere
/// else means the zero list is incomplete and raises DomainError.
QExperimentReport qSmoothness(const Poly2& p, std::span<const Point2> zeros, int N,
                              const QExperimentConfig& config = {});

}  // namespace dircyc
