#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

namespace dircyc {

using Complex = std::complex<double>;

/// Dense univariate polynomial sum_k a_k z^k with a tight degree.
/// The zero polynomial has degree 0 and a single zero coefficient.
class Poly1 {
 public:
  Poly1();
  explicit Poly1(std::vector<Complex> coeffs);

  static Poly1 constant(Complex c);
  static Poly1 monomial(int k, Complex c = 1.0);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool isZero() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == Complex{}; }
  /// Coefficient of z^k; zero outside the stored range.
  Complex operator[](int k) const noexcept;
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }

  Complex evaluate(Complex z) const noexcept;
  Poly1 derivative() const;
  double coeffNorm() const noexcept;
  double maxAbsCoeff() const noexcept;

 private:
  std::vector<Complex> coeffs_;
};

Poly1 operator+(const Poly1& p, const Poly1& q);
Poly1 operator-(const Poly1& p, const Poly1& q);
Poly1 operator*(const Poly1& p, const Poly1& q);
Poly1 operator*(Complex s, const Poly1& p);
bool operator==(const Poly1& p, const Poly1& q);

/// Copy of p with every coefficient of modulus <= absTol set to zero.
Poly1 chop(const Poly1& p, double absTol);

/// Dense bivariate polynomial sum a_kl z1^k z2^l, 0 <= k <= m, 0 <= l <= n.
///
/// The bidegree (m, n) is always tight: row m and column n each hold a
/// nonzero entry unless the polynomial is zero, in which case the grid is the
/// single entry a_00 = 0. Coefficients must be finite. Values are immutable.
class Poly2 {
 public:
  Poly2();
  /// `grid` is row-major in k: entry (k, l) lives at k * (n + 1) + l.
  /// Trailing zero rows and columns are trimmed.
  Poly2(int m, int n, std::vector<Complex> grid);

  static Poly2 constant(Complex c);
  static Poly2 monomial(int k, int l, Complex c = 1.0);

  int degZ1() const noexcept { return m_; }
  int degZ2() const noexcept { return n_; }
  int totalDegree() const noexcept;
  bool isZero() const noexcept { return m_ == 0 && n_ == 0 && grid_[0] == Complex{}; }
  bool isConstant() const noexcept { return m_ == 0 && n_ == 0; }

  Complex coeff(int k, int l) const noexcept;
  std::span<const Complex> grid() const noexcept { return grid_; }

  Complex evaluate(Complex z1, Complex z2) const noexcept;
  /// Euclidean norm of the coefficient grid.
  double coeffNorm() const noexcept;
  double maxAbsCoeff() const noexcept;

  /// Calls fn(k, l, a_kl) for every nonzero coefficient in graded order of the grid.
  template <class Fn>
  void forEachNonzero(Fn&& fn) const {
    for (int k = 0; k <= m_; ++k)
      for (int l = 0; l <= n_; ++l)
        if (const Complex c = grid_[k * (n_ + 1) + l]; c != Complex{}) fn(k, l, c);
  }

 private:
  int m_ = 0;
  int n_ = 0;
  std::vector<Complex> grid_;
};

Poly2 operator+(const Poly2& p, const Poly2& q);
Poly2 operator-(const Poly2& p, const Poly2& q);
Poly2 operator-(const Poly2& p);
Poly2 operator*(const Poly2& p, const Poly2& q);
Poly2 operator*(Complex s, const Poly2& p);
bool operator==(const Poly2& p, const Poly2& q);

inline Poly2 add(const Poly2& p, const Poly2& q) { return p + q; }
inline Poly2 mul(const Poly2& p, const Poly2& q) { return p * q; }
inline Complex evaluate(const Poly2& p, Complex z1, Complex z2) { return p.evaluate(z1, z2); }

Poly2 pow(const Poly2& p, int exponent);

/// Lifts a univariate polynomial to F(z1, z2) = f(z1).
Poly2 liftZ1(const Poly1& f);

/// Returns lambda with q ~= lambda * p when every coefficient of q - lambda p
/// is at most tol * max|coeff| (the larger of the two inputs), else nullopt.
/// Both inputs must be nonzero.
std::optional<Complex> proportional(const Poly2& p, const Poly2& q, double tol = 1e-10);

/// Largest coefficient-wise deviation |p_kl - q_kl| over the union grid.
double maxCoeffDiff(const Poly2& p, const Poly2& q);

}  // namespace dircyc
