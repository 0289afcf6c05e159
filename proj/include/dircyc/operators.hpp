#pragma once

#include "dircyc/poly.hpp"

namespace dircyc {

enum class SliceVariable { FixZ1, FixZ2 };

struct SlicePoint {
  SliceVariable which = SliceVariable::FixZ1;
  Complex value;
};

/// Restriction to one variable. FixZ1 at w gives the polynomial in z2 with
/// coefficients sum_k a_kl w^k; FixZ2 is symmetric. Exact, from coefficients.
Poly1 slice(const Poly2& f, const SlicePoint& at);

/// f(z, z): b_n = sum_{k+l=n} a_{k,l}.
Poly1 diagonal(const Poly2& f);

/// Reflection with respect to the stored bidegree (m, n):
/// reflect(f)_kl = conj(a_{m-k, n-l}), i.e. z1^m z2^n conj(f(1/conj z1, 1/conj z2)).
/// Equal in modulus to f on the torus. f must be nonzero.
Poly2 reflect(const Poly2& f);

/// a_kl -> zeta^k eta^l a_kl, i.e. f(zeta z1, eta z2). Both must be unimodular
/// within 1e-12, else DomainError.
Poly2 rotate(const Poly2& f, Complex zeta, Complex eta);

/// F(z1, z2) = f(z1 z2): coefficient a_m moves to grid position (m, m).
Poly2 embedDiagonalSub(const Poly1& f);

}  // namespace dircyc
