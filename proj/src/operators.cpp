#include "dircyc/operators.hpp"

#include <cmath>
#include <stdexcept>

#include "dircyc/errors.hpp"

namespace dircyc {

Poly1 slice(const Poly2& f, const SlicePoint& at) {
  const bool fixZ1 = at.which == SliceVariable::FixZ1;
  const int free = fixZ1 ? f.degZ2() : f.degZ1();
  const int fixed = fixZ1 ? f.degZ1() : f.degZ2();
  std::vector<Complex> c(static_cast<std::size_t>(free) + 1);
  for (int j = 0; j <= free; ++j) {
    Complex acc{};
    for (int i = fixed; i >= 0; --i) acc = acc * at.value + (fixZ1 ? f.coeff(i, j) : f.coeff(j, i));
    c[j] = acc;
  }
  return Poly1(std::move(c));
}

Poly1 diagonal(const Poly2& f) {
  std::vector<Complex> b(static_cast<std::size_t>(f.degZ1() + f.degZ2()) + 1);
  f.forEachNonzero([&](int k, int l, Complex a) { b[k + l] += a; });
  return Poly1(std::move(b));
}

Poly2 reflect(const Poly2& f) {
  if (f.isZero()) throw std::invalid_argument("reflect: zero polynomial");
  const int m = f.degZ1();
  const int n = f.degZ2();
  std::vector<Complex> g(static_cast<std::size_t>(m + 1) * (n + 1));
  for (int k = 0; k <= m; ++k)
    for (int l = 0; l <= n; ++l) g[k * (n + 1) + l] = std::conj(f.coeff(m - k, n - l));
  return Poly2(m, n, std::move(g));
}

Poly2 rotate(const Poly2& f, Complex zeta, Complex eta) {
  if (std::abs(std::abs(zeta) - 1.0) > 1e-12 || std::abs(std::abs(eta) - 1.0) > 1e-12)
    throw DomainError("rotate: zeta and eta must be unimodular");
  const int m = f.degZ1();
  const int n = f.degZ2();
  std::vector<Complex> g(static_cast<std::size_t>(m + 1) * (n + 1));
  Complex zk = 1.0;
  for (int k = 0; k <= m; ++k, zk *= zeta) {
    Complex el = 1.0;
    for (int l = 0; l <= n; ++l, el *= eta) g[k * (n + 1) + l] = zk * el * f.coeff(k, l);
  }
  return Poly2(m, n, std::move(g));
}

Poly2 embedDiagonalSub(const Poly1& f) {
  const int d = f.degree();
  std::vector<Complex> g(static_cast<std::size_t>(d + 1) * (d + 1));
  for (int j = 0; j <= d; ++j) g[j * (d + 1) + j] = f[j];
  return Poly2(d, d, std::move(g));
}

}  // namespace dircyc
