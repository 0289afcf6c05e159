#include "dircyc/poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dircyc {

namespace {

void requireFinite(std::span<const Complex> cs) {
  for (const Complex& c : cs)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw std::invalid_argument("polynomial coefficient is not finite");
}

}  // namespace

// ---------------------------------------------------------------- Poly1

Poly1::Poly1() : coeffs_{Complex{}} {}

Poly1::Poly1(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  requireFinite(coeffs_);
  while (coeffs_.size() > 1 && coeffs_.back() == Complex{}) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.push_back(Complex{});
}

Poly1 Poly1::constant(Complex c) { return Poly1(std::vector<Complex>{c}); }

Poly1 Poly1::monomial(int k, Complex c) {
  if (k < 0) throw std::invalid_argument("negative exponent");
  std::vector<Complex> cs(static_cast<std::size_t>(k) + 1);
  cs[k] = c;
  return Poly1(std::move(cs));
}

Complex Poly1::operator[](int k) const noexcept {
  if (k < 0 || k > degree()) return {};
  return coeffs_[k];
}

Complex Poly1::evaluate(Complex z) const noexcept {
  Complex acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Poly1 Poly1::derivative() const {
  if (degree() == 0) return Poly1();
  std::vector<Complex> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
  return Poly1(std::move(d));
}

double Poly1::coeffNorm() const noexcept {
  double s = 0;
  for (const Complex& c : coeffs_) s += std::norm(c);
  return std::sqrt(s);
}

double Poly1::maxAbsCoeff() const noexcept {
  double m = 0;
  for (const Complex& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

Poly1 operator+(const Poly1& p, const Poly1& q) {
  std::vector<Complex> r(static_cast<std::size_t>(std::max(p.degree(), q.degree())) + 1);
  for (int k = 0; k < static_cast<int>(r.size()); ++k) r[k] = p[k] + q[k];
  return Poly1(std::move(r));
}

Poly1 operator-(const Poly1& p, const Poly1& q) { return p + (-1.0) * q; }

Poly1 operator*(const Poly1& p, const Poly1& q) {
  std::vector<Complex> r(static_cast<std::size_t>(p.degree() + q.degree()) + 1);
  for (int i = 0; i <= p.degree(); ++i)
    for (int j = 0; j <= q.degree(); ++j) r[i + j] += p[i] * q[j];
  return Poly1(std::move(r));
}

Poly1 operator*(Complex s, const Poly1& p) {
  std::vector<Complex> r(p.coeffs().begin(), p.coeffs().end());
  for (Complex& c : r) c *= s;
  return Poly1(std::move(r));
}

bool operator==(const Poly1& p, const Poly1& q) {
  return std::ranges::equal(p.coeffs(), q.coeffs());
}

Poly1 chop(const Poly1& p, double absTol) {
  std::vector<Complex> r(p.coeffs().begin(), p.coeffs().end());
  for (Complex& c : r)
    if (std::abs(c) <= absTol) c = Complex{};
  return Poly1(std::move(r));
}

// ---------------------------------------------------------------- Poly2

Poly2::Poly2() : grid_{Complex{}} {}

Poly2::Poly2(int m, int n, std::vector<Complex> grid) : m_(m), n_(n), grid_(std::move(grid)) {
  if (m < 0 || n < 0) throw std::invalid_argument("negative bidegree");
  if (grid_.size() != static_cast<std::size_t>(m + 1) * static_cast<std::size_t>(n + 1))
    throw std::invalid_argument("coefficient grid does not match bidegree");
  requireFinite(grid_);

  int tm = 0, tn = 0;
  bool any = false;
  for (int k = 0; k <= m; ++k)
    for (int l = 0; l <= n; ++l)
      if (grid_[k * (n + 1) + l] != Complex{}) {
        tm = std::max(tm, k);
        tn = std::max(tn, l);
        any = true;
      }
  if (!any) {
    m_ = n_ = 0;
    grid_.assign(1, Complex{});
    return;
  }
  if (tm != m || tn != n) {
    std::vector<Complex> t(static_cast<std::size_t>(tm + 1) * (tn + 1));
    for (int k = 0; k <= tm; ++k)
      for (int l = 0; l <= tn; ++l) t[k * (tn + 1) + l] = grid_[k * (n + 1) + l];
    grid_ = std::move(t);
    m_ = tm;
    n_ = tn;
  }
}

Poly2 Poly2::constant(Complex c) { return Poly2(0, 0, {c}); }

Poly2 Poly2::monomial(int k, int l, Complex c) {
  if (k < 0 || l < 0) throw std::invalid_argument("negative exponent");
  std::vector<Complex> g(static_cast<std::size_t>(k + 1) * (l + 1));
  g[k * (l + 1) + l] = c;
  return Poly2(k, l, std::move(g));
}

int Poly2::totalDegree() const noexcept {
  int d = 0;
  forEachNonzero([&](int k, int l, Complex) { d = std::max(d, k + l); });
  return d;
}

Complex Poly2::coeff(int k, int l) const noexcept {
  if (k < 0 || l < 0 || k > m_ || l > n_) return {};
  return grid_[k * (n_ + 1) + l];
}

Complex Poly2::evaluate(Complex z1, Complex z2) const noexcept {
  Complex outer{};
  for (int k = m_; k >= 0; --k) {
    Complex inner{};
    for (int l = n_; l >= 0; --l) inner = inner * z2 + grid_[k * (n_ + 1) + l];
    outer = outer * z1 + inner;
  }
  return outer;
}

double Poly2::coeffNorm() const noexcept {
  double s = 0;
  for (const Complex& c : grid_) s += std::norm(c);
  return std::sqrt(s);
}

double Poly2::maxAbsCoeff() const noexcept {
  double m = 0;
  for (const Complex& c : grid_) m = std::max(m, std::abs(c));
  return m;
}

namespace {

template <class Op>
Poly2 combine(const Poly2& p, const Poly2& q, Op op) {
  const int m = std::max(p.degZ1(), q.degZ1());
  const int n = std::max(p.degZ2(), q.degZ2());
  std::vector<Complex> g(static_cast<std::size_t>(m + 1) * (n + 1));
  for (int k = 0; k <= m; ++k)
    for (int l = 0; l <= n; ++l) g[k * (n + 1) + l] = op(p.coeff(k, l), q.coeff(k, l));
  return Poly2(m, n, std::move(g));
}

}  // namespace

Poly2 operator+(const Poly2& p, const Poly2& q) {
  return combine(p, q, [](Complex a, Complex b) { return a + b; });
}

Poly2 operator-(const Poly2& p, const Poly2& q) {
  return combine(p, q, [](Complex a, Complex b) { return a - b; });
}

Poly2 operator-(const Poly2& p) { return (-1.0) * p; }

Poly2 operator*(const Poly2& p, const Poly2& q) {
  if (p.isZero() || q.isZero()) return Poly2();
  const int m = p.degZ1() + q.degZ1();
  const int n = p.degZ2() + q.degZ2();
  std::vector<Complex> g(static_cast<std::size_t>(m + 1) * (n + 1));
  p.forEachNonzero([&](int k1, int l1, Complex a) {
    q.forEachNonzero([&](int k2, int l2, Complex b) { g[(k1 + k2) * (n + 1) + (l1 + l2)] += a * b; });
  });
  return Poly2(m, n, std::move(g));
}

Poly2 operator*(Complex s, const Poly2& p) {
  std::vector<Complex> g(p.grid().begin(), p.grid().end());
  for (Complex& c : g) c *= s;
  return Poly2(p.degZ1(), p.degZ2(), std::move(g));
}

bool operator==(const Poly2& p, const Poly2& q) {
  return p.degZ1() == q.degZ1() && p.degZ2() == q.degZ2() && std::ranges::equal(p.grid(), q.grid());
}

Poly2 pow(const Poly2& p, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  Poly2 result = Poly2::constant(1.0);
  Poly2 base = p;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Poly2 liftZ1(const Poly1& f) {
  return Poly2(f.degree(), 0, std::vector<Complex>(f.coeffs().begin(), f.coeffs().end()));
}

double maxCoeffDiff(const Poly2& p, const Poly2& q) {
  double d = 0;
  const int m = std::max(p.degZ1(), q.degZ1());
  const int n = std::max(p.degZ2(), q.degZ2());
  for (int k = 0; k <= m; ++k)
    for (int l = 0; l <= n; ++l) d = std::max(d, std::abs(p.coeff(k, l) - q.coeff(k, l)));
  return d;
}

std::optional<Complex> proportional(const Poly2& p, const Poly2& q, double tol) {
  if (p.isZero() || q.isZero()) throw std::invalid_argument("proportional: zero polynomial");
  // Anchor on the largest coefficient of p so the ratio is well conditioned.
  int bk = 0, bl = 0;
  double best = -1;
  p.forEachNonzero([&](int k, int l, Complex c) {
    if (std::abs(c) > best) {
      best = std::abs(c);
      bk = k;
      bl = l;
    }
  });
  const Complex lambda = q.coeff(bk, bl) / p.coeff(bk, bl);
  if (lambda == Complex{}) return std::nullopt;
  const double scale = std::max(p.maxAbsCoeff(), q.maxAbsCoeff());
  if (maxCoeffDiff(q, lambda * p) > tol * scale) return std::nullopt;
  return lambda;
}

}  // namespace dircyc
