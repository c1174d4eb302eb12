#include "ckit/tscalar.hpp"

#include <cctype>

namespace ckit {

TScalar::TScalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ArithmeticError("TScalar: zero denominator");
  normalize();
}

void TScalar::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  Poly g = Poly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.exact_div(g);
    den_ = den_.exact_div(g);
  }
  Scalar lead = den_.leading();
  if (!lead.is_one()) {
    Scalar inv = lead.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

std::string TScalar::str() const {
  if (den_ == Poly(1)) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

namespace {

// Grammar: expr := term (('+'|'-') term)*
//          term := factor (('*'|'/') factor)*
//          factor := ['-'] ( '(' expr ')' | 'T' ['^' int] | scalar-literal )
struct TCursor {
  std::string_view s;
  std::size_t p = 0;

  void skip_ws() {
    while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
  }
  char peek() {
    skip_ws();
    return p < s.size() ? s[p] : '\0';
  }
  bool eat(char c) {
    skip_ws();
    if (p < s.size() && s[p] == c) {
      ++p;
      return true;
    }
    return false;
  }
};

TScalar parse_expr(TCursor& c);

TScalar parse_factor(TCursor& c) {
  if (c.eat('-')) return -parse_factor(c);
  if (c.eat('+')) return parse_factor(c);
  if (c.eat('(')) {
    TScalar v = parse_expr(c);
    if (!c.eat(')')) throw ParseError("expected ')'", c.p);
    return v;
  }
  if (c.peek() == 'T') {
    c.eat('T');
    int k = 1;
    if (c.eat('^')) {
      k = 0;
      c.skip_ws();
      if (c.p >= c.s.size() || !std::isdigit(static_cast<unsigned char>(c.s[c.p])))
        throw ParseError("expected exponent", c.p);
      while (c.p < c.s.size() &&
             std::isdigit(static_cast<unsigned char>(c.s[c.p]))) {
        k = k * 10 + (c.s[c.p] - '0');
        ++c.p;
      }
    }
    return TScalar(Poly::monomial(k, Scalar(1)));
  }
  // Scalar literal: consume a maximal run without T, parens or operators;
  // '/' stays inside the literal ("1/2√5") unless it divides by T or a
  // parenthesized expression.
  c.skip_ws();
  std::size_t start = c.p;
  while (c.p < c.s.size()) {
    char ch = c.s[c.p];
    if (ch == 'T' || ch == '(' || ch == ')' || ch == '*' || ch == '+' ||
        ch == '-' || ch == '^' || std::isspace(static_cast<unsigned char>(ch)))
      break;
    if (ch == '/') {
      std::size_t next = c.p + 1;
      while (next < c.s.size() &&
             std::isspace(static_cast<unsigned char>(c.s[next])))
        ++next;
      if (next < c.s.size() && (c.s[next] == 'T' || c.s[next] == '(')) break;
    }
    ++c.p;
  }
  if (c.p == start) throw ParseError("expected factor", c.p);
  return TScalar(Scalar::parse(c.s.substr(start, c.p - start)));
}

TScalar parse_term(TCursor& c) {
  TScalar v = parse_factor(c);
  for (;;) {
    if (c.eat('*')) {
      v *= parse_factor(c);
    } else if (c.eat('/')) {
      v /= parse_factor(c);
    } else {
      break;
    }
  }
  return v;
}

TScalar parse_expr(TCursor& c) {
  TScalar v = parse_term(c);
  for (;;) {
    if (c.eat('+')) {
      v += parse_term(c);
    } else if (c.peek() == '-') {
      c.eat('-');
      v -= parse_term(c);
    } else {
      break;
    }
  }
  return v;
}

}  // namespace

TScalar TScalar::parse(std::string_view text) {
  TCursor c{text};
  TScalar v = parse_expr(c);
  c.skip_ws();
  if (c.p != text.size()) throw ParseError("trailing input", c.p);
  return v;
}

}  // namespace ckit
