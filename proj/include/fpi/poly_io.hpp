#pragma once

// Text form of polynomials: `3*x^2*y - z`. Terms are joined by + and -,
// factors are integers, identifiers with an optional ^exponent, or
// parenthesised sub-expressions. Whitespace is insignificant.

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fpi/error.hpp"
#include "fpi/gfpoly.hpp"

namespace fpi {

/// Prints terms in descending grevlex order with centred coefficients.
inline std::string to_string(const Polynomial& f, const std::vector<std::string>& vars) {
  if (f.is_zero()) return "0";
  const Polynomial g = f.order() == MonomialOrder::grevlex() ? f : f.with_order(MonomialOrder::grevlex());
  std::string out;
  bool first = true;
  for (const auto& t : g.terms()) {
    std::int64_t c = f.field().centered(t.coeff);
    bool negative = c < 0;
    std::uint64_t mag = negative ? static_cast<std::uint64_t>(-c) : static_cast<std::uint64_t>(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string body;
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (!t.mono[i]) continue;
      if (!body.empty()) body += "*";
      body += i < vars.size() ? vars[i] : "v" + std::to_string(i);
      if (t.mono[i] > 1) body += "^" + std::to_string(t.mono[i]);
    }
    if (body.empty()) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag) + "*";
      out += body;
    }
  }
  return out;
}

namespace detail {

class PolyParser {
 public:
  PolyParser(std::string_view text, const std::vector<std::string>& vars, PrimeField field,
             std::size_t line, std::size_t column0)
      : text_(text), vars_(vars), field_(field), line_(line), column0_(column0) {}

  Polynomial parse() {
    skip_ws();
    if (pos_ == text_.size()) fail(ErrorKind::Syntax, "empty polynomial");
    Polynomial f = expr();
    skip_ws();
    if (pos_ != text_.size()) fail(ErrorKind::Syntax, std::string("unexpected '") + text_[pos_] + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(ErrorKind kind, const std::string& msg) const {
    throw ParseError(kind, line_, column0_ + pos_, msg);
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Polynomial zero() const { return Polynomial(field_, vars_.size()); }
  Polynomial one() const { return Polynomial::constant(field_, vars_.size(), 1); }

  Polynomial expr() {
    Polynomial acc = zero();
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    for (;;) {
      Polynomial t = term();
      acc = negate ? acc - t : acc + t;
      if (accept('+')) negate = false;
      else if (accept('-')) negate = true;
      else break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      skip_ws();
      if (accept('*')) {
        acc *= factor();
        continue;
      }
      // Juxtaposition: `3x` or `2(x+y)`.
      if (pos_ < text_.size() &&
          (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' || text_[pos_] == '(')) {
        acc *= factor();
        continue;
      }
      break;
    }
    return acc;
  }

  std::uint64_t number() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail(ErrorKind::Syntax, "expected a number");
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > (1ull << 40)) fail(ErrorKind::Syntax, "number too large");
      ++pos_;
    }
    return v;
  }

  Polynomial factor() {
    skip_ws();
    if (pos_ >= text_.size()) fail(ErrorKind::Syntax, "unexpected end of input");
    char c = text_[pos_];
    Polynomial base = zero();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::uint64_t v = number();
      base = Polynomial::constant(field_, vars_.size(), static_cast<std::int64_t>(v % field_.p()));
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      std::size_t idx = vars_.size();
      for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) idx = i;
      if (idx == vars_.size()) {
        pos_ = start;
        fail(ErrorKind::UnknownVariable, "unknown variable '" + name + "'");
      }
      base = Polynomial::variable(field_, vars_.size(), idx);
    } else if (c == '(') {
      ++pos_;
      base = expr();
      if (!accept(')')) fail(ErrorKind::Syntax, "expected ')'");
    } else {
      fail(ErrorKind::Syntax, std::string("unexpected '") + c + "'");
    }
    if (accept('^')) {
      std::uint64_t e = number();
      if (base.is_monomial() && !base.is_zero()) {
        const auto& t = base.leading_term();
        return Polynomial::monomial(field_, t.mono.pow(e), field_.pow(t.coeff, e));
      }
      base = poly_pow(base, e);
    }
    return base;
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  PrimeField field_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t column0_;
};

}  // namespace detail

/// Parses one polynomial. `line`/`column` locate `text` inside a larger file
/// for diagnostics.
inline Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& vars, PrimeField field,
                                   std::size_t line = 1, std::size_t column = 1) {
  return detail::PolyParser(text, vars, field, line, column).parse();
}

}  // namespace fpi
