#include "dircyc/resultant.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dircyc/fft.hpp"

namespace dircyc {

namespace {

// z2-coefficients of p at a fixed z1: c_l = sum_k a_kl z1^k.
std::vector<Complex> z2Coefficients(const Poly2& p, Complex z1) {
  std::vector<Complex> c(static_cast<std::size_t>(p.degZ2()) + 1);
  for (int l = 0; l <= p.degZ2(); ++l) {
    Complex acc{};
    for (int k = p.degZ1(); k >= 0; --k) acc = acc * z1 + p.coeff(k, l);
    c[l] = acc;
  }
  return c;
}

Complex sylvesterDeterminant(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  const int na = static_cast<int>(a.size()) - 1;
  const int nb = static_cast<int>(b.size()) - 1;
  const int size = na + nb;
  Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(size, size);
  for (int row = 0; row < nb; ++row)
    for (int j = 0; j <= na; ++j) s(row, row + j) = a[na - j];
  for (int row = 0; row < na; ++row)
    for (int j = 0; j <= nb; ++j) s(nb + row, row + j) = b[nb - j];
  return s.partialPivLu().determinant();
}

}  // namespace

Poly1 resultantZ2(const Poly2& p, const Poly2& q) {
  if (p.degZ2() == 0 || q.degZ2() == 0)
    throw std::invalid_argument("resultantZ2: both polynomials need positive degree in z2");
  const int bound = p.degZ1() * q.degZ2() + q.degZ1() * p.degZ2();
  const int samples = bound + 1;
  std::vector<Complex> values(samples);
  for (int j = 0; j < samples; ++j) {
    const Complex w = std::polar(1.0, 2 * std::numbers::pi * j / samples);
    values[j] = sylvesterDeterminant(z2Coefficients(p, w), z2Coefficients(q, w));
  }
  std::vector<Complex> coeffs = dft(values);
  for (Complex& c : coeffs) c /= static_cast<double>(samples);
  return Poly1(std::move(coeffs));
}

double resultantZeroThreshold(const Poly2& p, const Poly2& q, double relTol) {
  return relTol * std::pow(p.coeffNorm(), q.degZ2()) * std::pow(q.coeffNorm(), p.degZ2());
}

}  // namespace dircyc
