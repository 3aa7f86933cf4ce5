#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "polysnf/algebra/polynomial.hpp"
#include "polysnf/error.hpp"

namespace polysnf {

namespace detail {

// expr    := term (('+' | '-') term)*
// term    := unary (('*' unary) | ('/' integer))*
// unary   := ('+' | '-') unary | power
// power   := primary ('^' integer)?
// primary := integer | identifier | '(' expr ')'
class PolyParser {
 public:
  PolyParser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    Polynomial p = expr();
    skip_ws();
    if (!at_end()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return p;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (accept('+')) acc = acc + term();
      else if (accept('-')) acc = acc - term();
      else return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        skip_ws();
        std::size_t at = pos_;
        Integer d = integer();
        Rational r = ring_->field().reduce(Rational(d));
        if (d == 0 || r == 0) throw ParseError("division by zero", at);
        acc = acc.scaled(ring_->field().inv(r));
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (accept('^')) {
      skip_ws();
      std::size_t at = pos_;
      Integer e = integer();
      if (!e.fits_uint_p() || e > 100000) throw ParseError("exponent too large", at);
      return base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  Polynomial primary() {
    skip_ws();
    if (at_end()) throw ParseError("unexpected end of input", pos_);
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t at = pos_;
      Integer v = integer();
      try {
        return Polynomial::constant(ring_, Rational(v));
      } catch (const DivisionByZero&) {
        throw ParseError("invalid constant", at);
      }
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto idx = ring_->index_of(name);
      if (!idx) throw UndeclaredVariable(name, start);
      return Polynomial::variable(ring_, *idx);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  Integer integer() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw ParseError("expected integer", start);
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the polynomial text grammar (integers, a/b, *, +, -, ^, parentheses,
/// declared variable names).
inline Polynomial parse_poly(std::string_view text, const RingPtr& ring) {
  return detail::PolyParser(text, ring).parse();
}

inline std::string format_poly(const Polynomial& p) { return p.to_string(); }

/// Parses a field constant such as "3", "-1/2".
inline Rational parse_constant(std::string_view text, const RingPtr& ring) {
  Polynomial p = parse_poly(text, ring);
  if (!p.is_constant()) throw ParseError("expected a constant", 0);
  return p.constant_coeff();
}

}  // namespace polysnf
