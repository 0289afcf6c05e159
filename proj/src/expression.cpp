#include "dircyc/expression.hpp"

#include <fmt/format.h>

#include <cctype>
#include <charconv>
#include <cstdlib>

#include "dircyc/errors.hpp"

namespace dircyc {

namespace {

class Parser {
 public:
  Parser(std::string_view text, int maxDegree) : text_(text), maxDegree_(maxDegree) {}

  Poly2 parse() {
    Poly2 result = expr();
    skipSpace();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  void skipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skipSpace();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool startsFactor() {
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '(' || c == 'i' || c == 'z';
  }

  Poly2 checked(Poly2 p, std::size_t at) const {
    if (p.degZ1() > maxDegree_ || p.degZ2() > maxDegree_)
      throw DegreeOverflowError("degree exceeds configured maximum " + std::to_string(maxDegree_), at);
    return p;
  }

  Poly2 expr() {
    Poly2 acc = term();
    for (;;) {
      const char c = peek();
      if (c == '+') {
        ++pos_;
        acc = acc + term();
      } else if (c == '-') {
        ++pos_;
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Poly2 term() {
    const std::size_t start = pos_;
    Poly2 acc = factor();
    for (;;) {
      if (peek() == '*') {
        ++pos_;
        acc = checked(acc * factor(), start);
      } else if (startsFactor()) {
        acc = checked(acc * factor(), start);
      } else {
        return acc;
      }
    }
  }

  Poly2 factor() {
    if (peek() == '-') {
      ++pos_;
      return -factor();
    }
    const std::size_t start = pos_;
    Poly2 b = base();
    if (peek() == '^') {
      ++pos_;
      skipSpace();
      const std::size_t expAt = pos_;
      unsigned long e = 0;
      const char* first = text_.data() + pos_;
      const char* last = text_.data() + text_.size();
      auto [ptr, ec] = std::from_chars(first, last, e);
      if (ec == std::errc::result_out_of_range)
        throw DegreeOverflowError("exponent too large", expAt);
      if (ec != std::errc{} || ptr == first) fail("expected unsigned integer exponent");
      pos_ += static_cast<std::size_t>(ptr - first);
      const long degree = static_cast<long>(std::max(b.degZ1(), b.degZ2()));
      if (degree > 0 && static_cast<unsigned long>(maxDegree_) / static_cast<unsigned long>(degree) < e)
        throw DegreeOverflowError("degree exceeds configured maximum " + std::to_string(maxDegree_), expAt);
      if (degree == 0 && e > 1u << 20) throw DegreeOverflowError("exponent too large", expAt);
      return checked(pow(b, static_cast<int>(e)), start);
    }
    return b;
  }

  Poly2 base() {
    const char c = peek();
    if (c == '\0') fail("unexpected end of input");
    if (c == '(') {
      ++pos_;
      Poly2 inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  Poly2 number() {
    const std::size_t start = pos_;
    // strtod accepts forms like "inf" and hex; restrict to decimal literals first.
    std::size_t end = pos_;
    auto digits = [&] {
      while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
    };
    digits();
    if (end < text_.size() && text_[end] == '.') {
      ++end;
      digits();
    }
    if (end < text_.size() && (text_[end] == 'e' || text_[end] == 'E')) {
      std::size_t save = end++;
      if (end < text_.size() && (text_[end] == '+' || text_[end] == '-')) ++end;
      const std::size_t expStart = end;
      digits();
      if (end == expStart) end = save;
    }
    const std::string literal(text_.substr(start, end - start));
    if (literal == ".") fail("malformed number");
    char* stop = nullptr;
    const double value = std::strtod(literal.c_str(), &stop);
    if (stop != literal.c_str() + literal.size() || !std::isfinite(value)) fail("malformed number");
    pos_ = end;
    return Poly2::constant(value);
  }

  // Identifiers are single tokens so that juxtaposed factors like "2z1z2" split.
  // A digit right after "z" other than 1 or 2 is rejected rather than read as a product.
  Poly2 identifier() {
    const std::size_t start = pos_;
    const char c = text_[pos_];
    Poly2 result;
    if (c == 'i') {
      result = Poly2::constant(Complex(0, 1));
      pos_ = start + 1;
    } else if (c == 'z') {
      const char next = start + 1 < text_.size() ? text_[start + 1] : '\0';
      if (next == '2') {
        result = Poly2::monomial(0, 1);
        pos_ = start + 2;
      } else if (next == '1') {
        result = Poly2::monomial(1, 0);
        pos_ = start + 2;
      } else if (std::isdigit(static_cast<unsigned char>(next))) {
        fail("unknown variable 'z" + std::string(1, next) + "'");
      } else {
        result = Poly2::monomial(1, 0);
        pos_ = start + 1;
      }
    } else {
      std::size_t end = pos_;
      while (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) ++end;
      fail("unknown identifier '" + std::string(text_.substr(start, end - start)) + "'");
    }
    return result;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int maxDegree_;
};

std::string formatCoefficient(Complex c) {
  if (c.imag() == 0.0) return fmt::format("{:.17g}", c.real());
  if (c.real() == 0.0) return fmt::format("{:.17g}*i", c.imag());
  return fmt::format("({:.17g} + {:.17g}*i)", c.real(), c.imag());
}

}  // namespace

Poly2 parseExpression(std::string_view text, int maxDegree) { return Parser(text, maxDegree).parse(); }

std::string formatExpression(const Poly2& p) {
  if (p.isZero()) return "0";
  std::string out;
  p.forEachNonzero([&](int k, int l, Complex c) {
    if (!out.empty()) out += " + ";
    out += formatCoefficient(c);
    if (k > 0) out += k == 1 ? "*z1" : fmt::format("*z1^{}", k);
    if (l > 0) out += l == 1 ? "*z2" : fmt::format("*z2^{}", l);
  });
  return out;
}

}  // namespace dircyc
