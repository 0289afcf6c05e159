#pragma once

#include <vector>

#include "dircyc/poly.hpp"

namespace dircyc {

struct RootFinderOptions {
  int maxIterations = 200;
  /// Convergence: |r(z)| <= residualTol * sum_k |a_k| |z|^k at every iterate.
  double residualTol = 1e-10;
  /// Roots closer than this (relative to max(1, |z|)) are merged into their mean.
  double clusterTol = 1e-4;
  /// Iterates for an m-fold root scatter by about eps^(1/m); groups within this
  /// radius (relative to max(1, |z|)) are tested as one multiple root.
  double clusterRadius = 0.2;
  /// A group of m iterates is one root when the first m Taylor coefficients at
  /// its mean are below this fraction of their absolute-value bounds.
  double multiplicityTol = 1e-8;
};

struct RootCluster {
  Complex centre;
  int multiplicity = 1;
};

/// All complex roots of r with multiplicity, by Aberth-Ehrlich simultaneous
/// iteration started on a slightly perturbed circle. Exact zero roots are
/// split off first. Throws ConvergenceFailure (carrying the final iterates)
/// when the residual target is missed after maxIterations.
std::vector<Complex> aberthRoots(const Poly1& r, const RootFinderOptions& options = {});

/// Merges roots that agree within clusterTol into one representative (the
/// cluster mean, which is far more accurate than each member for a multiple root).
std::vector<Complex> collapseClusters(std::vector<Complex> roots, double clusterTol);

/// Groups the iterates of aberthRoots(r) into distinct roots. A group counts as
/// an m-fold root when r and its first m - 1 derivatives vanish at the group
/// mean (to multiplicityTol); leftovers are merged by collapseClusters.
std::vector<RootCluster> clusterRoots(const Poly1& r, std::vector<Complex> roots, const RootFinderOptions& options = {});

/// Distinct roots rho of r with | |rho| - 1 | <= circleTol. r must be nonzero.
std::vector<Complex> rootsOnUnitCircle(const Poly1& r, double circleTol = 1e-6,
                                       const RootFinderOptions& options = {});

}  // namespace dircyc
