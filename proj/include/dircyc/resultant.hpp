#pragma once

#include "dircyc/poly.hpp"

namespace dircyc {

/// Res_{z2}(p, q) as a polynomial in z1: the determinant of the Sylvester
/// matrix built from the z2-coefficients of p and q (p's rows first,
/// coefficients in descending powers of z2).
///
/// Computed by evaluation at D + 1 roots of unity in z1, where
/// D = deg_{z1}(p) deg_{z2}(q) + deg_{z1}(q) deg_{z2}(p) bounds the degree,
/// a partial-pivot LU determinant per sample, and an inverse DFT. The result
/// is the raw interpolant; compare against resultantZeroThreshold to decide
/// whether it vanishes identically.
///
/// Throws std::invalid_argument if either input has z2-degree zero.
Poly1 resultantZ2(const Poly2& p, const Poly2& q);

/// Coefficient level below which a computed resultant counts as identically zero:
/// relTol * |p|^{deg_{z2} q} * |q|^{deg_{z2} p} with |.| the Euclidean coefficient norm.
double resultantZeroThreshold(const Poly2& p, const Poly2& q, double relTol = 1e-8);

}  // namespace dircyc
