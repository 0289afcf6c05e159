#pragma once

#include <string>
#include <string_view>

#include "dircyc/poly.hpp"

namespace dircyc {

inline constexpr int kDefaultMaxDegree = 512;

/// Parses and expands a polynomial expression in z1, z2 (`z` aliases `z1`).
///
///   expr   := term { ("+"|"-") term }
///   term   := factor { ["*"] factor }
///   factor := base [ "^" uint ]
///   base   := number | "i" | "z1" | "z2" | "z" | "(" expr ")" | "-" base
///
/// A leading minus negates the whole power, so "-z1^2" is -(z1^2).
/// Throws ParseError with the offending offset, or DegreeOverflowError when
/// any intermediate degree exceeds `maxDegree`.
Poly2 parseExpression(std::string_view text, int maxDegree = kDefaultMaxDegree);

/// Renders p so that parseExpression(formatExpression(p)) reproduces the
/// coefficient grid bit for bit (coefficients use 17 significant digits).
std::string formatExpression(const Poly2& p);

}  // namespace dircyc
