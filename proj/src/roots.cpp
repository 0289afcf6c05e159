#include "dircyc/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dircyc/errors.hpp"

namespace dircyc {

namespace {

double absEval(std::span<const Complex> a, double radius) {
  double acc = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * radius + std::abs(*it);
  return acc;
}

bool converged(const Poly1& r, Complex z, double tol) {
  return std::abs(r.evaluate(z)) <= tol * absEval(r.coeffs(), std::abs(z));
}

// Radius of the initial circle: geometric mean of the root moduli, |a0/an|^(1/n).
double initialRadius(const Poly1& r) {
  const int n = r.degree();
  const double ratio = std::abs(r[0]) / std::abs(r[n]);
  const double rad = std::pow(ratio, 1.0 / n);
  return std::isfinite(rad) && rad > 0 ? rad : 1.0;
}

}  // namespace

std::vector<Complex> aberthRoots(const Poly1& r, const RootFinderOptions& options) {
  if (r.isZero()) throw std::invalid_argument("aberthRoots: zero polynomial");

  // Split off exact roots at the origin.
  std::vector<Complex> roots;
  int shift = 0;
  while (shift < r.degree() && r[shift] == Complex{}) ++shift;
  roots.assign(static_cast<std::size_t>(shift), Complex{});
  const Poly1 q(std::vector<Complex>(r.coeffs().begin() + shift, r.coeffs().end()));
  const int n = q.degree();
  if (n == 0) return roots;
  if (n == 1) {
    roots.push_back(-q[0] / q[1]);
    return roots;
  }

  const Poly1 dq = q.derivative();
  const double radius = initialRadius(q);
  std::vector<Complex> z(n);
  for (int j = 0; j < n; ++j) {
    // Offset angle and a small radial wobble keep the start off any symmetry axis.
    const double theta = 2 * std::numbers::pi * j / n + 0.4;
    z[j] = std::polar(radius * (1.0 + 0.01 * ((j % 3) - 1)), theta);
  }

  std::vector<bool> done(n, false);
  for (int iter = 0; iter < options.maxIterations; ++iter) {
    bool all = true;
    for (int j = 0; j < n; ++j) {
      if (done[j]) continue;
      const Complex pv = q.evaluate(z[j]);
      if (pv == Complex{}) {
        done[j] = true;
        continue;
      }
      const Complex ratio = pv / dq.evaluate(z[j]);
      Complex repulsion{};
      for (int k = 0; k < n; ++k)
        if (k != j) repulsion += 1.0 / (z[j] - z[k]);
      Complex step = ratio / (1.0 - ratio * repulsion);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) step = ratio;
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag()))
        step = std::polar(1e-3 * std::max(1.0, std::abs(z[j])), 0.7 * (j + 1));
      z[j] -= step;
      if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(z[j]))) done[j] = true;
      all = all && done[j];
    }
    if (all) break;
  }

  for (const Complex& zj : z) {
    // Multiple roots stall at ~eps^(1/m) in position, where the residual is already tiny.
    if (!converged(q, zj, options.residualTol)) {
      std::vector<Complex> dump = z;
      throw ConvergenceFailure("Aberth iteration did not converge for degree " + std::to_string(n), dump);
    }
  }
  roots.insert(roots.end(), z.begin(), z.end());
  return roots;
}

std::vector<Complex> collapseClusters(std::vector<Complex> roots, double clusterTol) {
  std::vector<Complex> out;
  std::vector<bool> used(roots.size(), false);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    Complex sum = roots[i];
    int count = 1;
    used[i] = true;
    // Greedy single linkage, grown until no new member joins.
    for (bool grew = true; grew;) {
      grew = false;
      for (std::size_t j = 0; j < roots.size(); ++j) {
        if (used[j]) continue;
        const Complex centre = sum / static_cast<double>(count);
        if (std::abs(roots[j] - centre) <= clusterTol * std::max(1.0, std::abs(centre))) {
          sum += roots[j];
          ++count;
          used[j] = true;
          grew = true;
        }
      }
    }
    out.push_back(sum / static_cast<double>(count));
  }
  return out;
}

namespace {

// True when the Taylor coefficients t_0..t_{m-1} of r at c are all below
// tol times sum_k |a_k| C(k, j) |c|^(k-j).
bool vanishesToOrder(const Poly1& r, Complex c, int m, double tol) {
  const auto a = r.coeffs();
  const int n = r.degree();
  const double rc = std::abs(c);
  for (int j = 0; j < m; ++j) {
    Complex t{};
    double s = 0;
    double binom = 1;  // C(k, j) for k = j, j+1, ...
    Complex pw = 1.0;
    double pa = 1.0;
    for (int k = j; k <= n; ++k) {
      if (k > j) {
        binom = binom * k / (k - j);
        pw *= c;
        pa *= rc;
      }
      t += a[k] * binom * pw;
      s += std::abs(a[k]) * binom * pa;
    }
    if (std::abs(t) > tol * s) return false;
  }
  return true;
}

// An m-fold root of r is a simple root of r^(m-1); Newton there recovers the
// centre that the scattered iterates only locate to eps^(1/m).
Complex refineCentre(const Poly1& dr, const Poly1& ddr, Complex c, double reach) {
  const Complex start = c;
  for (int it = 0; it < 60; ++it) {
    const Complex d = ddr.evaluate(c);
    if (d == Complex{}) break;
    const Complex step = dr.evaluate(c) / d;
    if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
    c -= step;
    if (std::abs(c - start) > reach) return start;
    if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(c))) break;
  }
  return c;
}

}  // namespace

std::vector<RootCluster> clusterRoots(const Poly1& r, std::vector<Complex> roots, const RootFinderOptions& options) {
  std::vector<RootCluster> out;
  std::vector<bool> used(roots.size(), false);
  std::vector<Complex> singles;
  std::vector<Poly1> derivs{r};  // derivs[j] = r^(j)
  auto derivative = [&](std::size_t j) -> const Poly1& {
    while (derivs.size() <= j) derivs.push_back(derivs.back().derivative());
    return derivs[j];
  };
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    const double reach = options.clusterRadius * std::max(1.0, std::abs(roots[i]));
    std::vector<std::size_t> near;
    for (std::size_t j = 0; j < roots.size(); ++j)
      if (j != i && !used[j] && std::abs(roots[j] - roots[i]) <= reach) near.push_back(j);
    std::ranges::sort(near, {}, [&](std::size_t j) { return std::abs(roots[j] - roots[i]); });

    int best = 1;
    Complex bestCentre = roots[i], sum = roots[i];
    for (std::size_t m = 2; m <= near.size() + 1; ++m) {
      sum += roots[near[m - 2]];
      const Complex c = refineCentre(derivative(m - 1), derivative(m), sum / static_cast<double>(m), reach);
      if (vanishesToOrder(r, c, static_cast<int>(m), options.multiplicityTol)) {
        best = static_cast<int>(m);
        bestCentre = c;
      }
    }
    used[i] = true;
    if (best == 1) {
      singles.push_back(roots[i]);
      continue;
    }
    for (int m = 0; m < best - 1; ++m) used[near[m]] = true;
    out.push_back({bestCentre, best});
  }
  for (const Complex& c : collapseClusters(std::move(singles), options.clusterTol)) out.push_back({c, 1});
  // Simple roots merged by collapseClusters lose their count; it is only reported, not used.
  return out;
}

std::vector<Complex> rootsOnUnitCircle(const Poly1& r, double circleTol, const RootFinderOptions& options) {
  std::vector<Complex> result;
  for (const RootCluster& c : clusterRoots(r, aberthRoots(r, options), options))
    if (std::abs(std::abs(c.centre) - 1.0) <= circleTol) result.push_back(c.centre);
  return result;
}

}  // namespace dircyc
