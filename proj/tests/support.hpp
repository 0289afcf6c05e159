#pragma once

#include <random>

#include <Eigen/Dense>

#include "dircyc/approximant.hpp"
#include "dircyc/poly.hpp"
#include "dircyc/spaces.hpp"

namespace testing {

using dircyc::Complex;
using dircyc::Poly2;

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611);
  return gen;
}

inline Complex randomComplex(double scale = 1.0) {
  std::normal_distribution<double> n(0.0, scale);
  return {n(rng()), n(rng())};
}

/// Dense random polynomial with bidegree at most (m, n).
inline Poly2 randomPoly(int m, int n) {
  std::vector<Complex> g(static_cast<std::size_t>(m + 1) * (n + 1));
  for (Complex& c : g) c = randomComplex();
  return Poly2(m, n, std::move(g));
}

inline Poly2 randomPolyUpTo(int maxDeg) {
  std::uniform_int_distribution<int> d(0, maxDeg);
  return randomPoly(d(rng()), d(rng()));
}

/// Uniform point in the disk of radius r.
inline Complex randomInDisk(double r = 1.0) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return std::polar(r * std::sqrt(u(rng())), 2.0 * 3.141592653589793 * u(rng()));
}

inline Complex randomUnimodular() {
  std::uniform_real_distribution<double> u(0.0, 2.0 * 3.141592653589793);
  return std::polar(1.0, u(rng()));
}

/// Squared distance from 1 to span{e f : e in basis} by SVD least squares on the
/// weighted coefficient matrix; shares nothing with the Cholesky route.
inline double bruteForceDistanceSquared(const Poly2& f, const dircyc::BasisSpec& spec,
                                        const dircyc::SpaceSpec& space) {
  const auto basis = dircyc::basisMonomials(spec);
  int maxK = 0, maxL = 0;
  for (const auto& e : basis) {
    maxK = std::max(maxK, e.k + f.degZ1());
    maxL = std::max(maxL, e.l + f.degZ2());
  }
  const int rows = (maxK + 1) * (maxL + 1);
  Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(rows, static_cast<int>(basis.size()));
  Eigen::VectorXcd b = Eigen::VectorXcd::Zero(rows);
  auto row = [&](int k, int l) { return k * (maxL + 1) + l; };
  for (int j = 0; j < static_cast<int>(basis.size()); ++j)
    f.forEachNonzero([&](int k, int l, Complex c) {
      const int kk = k + basis[j].k, ll = l + basis[j].l;
      A(row(kk, ll), j) = std::sqrt(dircyc::weight(space, kk, ll)) * c;
    });
  b(row(0, 0)) = 1.0;
  const Eigen::VectorXcd x = A.bdcSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(b);
  return (A * x - b).squaredNorm();
}

}  // namespace testing
