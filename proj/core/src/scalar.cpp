#include "ckit/scalar.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <utility>

namespace ckit {

namespace {

// Gaussian rational helpers on (re, im) pairs.
struct G {
  mpq_class re, im;
};
G gmul(const G& x, const G& y) {
  return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}
G gsub(const G& x, const G& y) { return {x.re - y.re, x.im - y.im}; }
G gadd(const G& x, const G& y) { return {x.re + y.re, x.im + y.im}; }
G gscale(const G& x, const mpq_class& q) { return {x.re * q, x.im * q}; }

}  // namespace

SquareFree square_free_split(long long n) {
  if (n <= 0) throw ArithmeticError("square_free_split: radicand must be > 0");
  long long s = 1, d = 1;
  for (long long p = 2; p * p <= n; ++p) {
    long long mult = 0;
    while (n % p == 0) {
      n /= p;
      ++mult;
    }
    for (long long k = 0; k + 1 < mult; k += 2) s *= p;
    if (mult % 2 == 1) d *= p;
  }
  d *= n;
  return {s, d};
}

Scalar Scalar::rational(long long p, long long q) {
  if (q == 0) throw ArithmeticError("rational: zero denominator");
  mpq_class v(static_cast<long>(p), static_cast<long>(q));
  v.canonicalize();
  return Scalar(v);
}

Scalar Scalar::i() { return make(0, 1, 0, 0, 0); }

Scalar Scalar::sqrt_int(long long n) {
  auto [s, d] = square_free_split(n);
  if (d == 1) return Scalar(s);
  return make(0, 0, mpq_class(static_cast<long>(s)), 0, d);
}

Scalar Scalar::make(mpq_class a, mpq_class b, mpq_class c, mpq_class e,
                    long long d) {
  Scalar z;
  z.a_ = std::move(a);
  z.b_ = std::move(b);
  z.c_ = std::move(c);
  z.e_ = std::move(e);
  z.d_ = d;
  z.a_.canonicalize();
  z.b_.canonicalize();
  z.c_.canonicalize();
  z.e_.canonicalize();
  z.normalize();
  return z;
}

void Scalar::normalize() {
  if (c_ == 0 && e_ == 0) {
    d_ = 0;
    return;
  }
  if (d_ <= 1) throw ArithmeticError("Scalar: radicand must be square-free > 1");
}

long long Scalar::join_d(const Scalar& x, const Scalar& y) {
  if (x.d_ == 0) return y.d_;
  if (y.d_ == 0 || y.d_ == x.d_) return x.d_;
  throw ArithmeticError("Scalar: mixing √" + std::to_string(x.d_) + " with √" +
                        std::to_string(y.d_));
}

Scalar Scalar::operator+(const Scalar& o) const {
  long long d = join_d(*this, o);
  return make(a_ + o.a_, b_ + o.b_, c_ + o.c_, e_ + o.e_, d);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  long long d = join_d(*this, o);
  G A{a_, b_}, B{c_, e_}, C{o.a_, o.b_}, D{o.c_, o.e_};
  // (A + B√d)(C + D√d) = AC + BD·d + (AD + BC)√d
  G rat = gadd(gmul(A, C), gscale(gmul(B, D), mpq_class(static_cast<long>(d))));
  G quad = gadd(gmul(A, D), gmul(B, C));
  return make(rat.re, rat.im, quad.re, quad.im, d);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw ArithmeticError("Scalar: division by zero");
  // 1/(A + B√d) = (A − B√d)/(A² − B²d); the denominator is a Gaussian
  // rational, nonzero because √d is irrational over Q(i).
  G A{a_, b_}, B{c_, e_};
  G den = gsub(gmul(A, A), gscale(gmul(B, B), mpq_class(static_cast<long>(d_))));
  // Gaussian inverse of den.
  mpq_class n2 = den.re * den.re + den.im * den.im;
  G deninv{den.re / n2, -den.im / n2};
  G ra = gmul(A, deninv);
  G rq = gmul(gscale(B, mpq_class(-1)), deninv);
  return make(ra.re, ra.im, rq.re, rq.im, d_);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::pow(long long k) const {
  if (k < 0) return inverse().pow(-k);
  Scalar acc(1), base = *this;
  while (k > 0) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

bool Scalar::is_integer() const {
  return is_rational() && a_.get_den() == 1;
}

mpq_class Scalar::rat() const {
  if (!is_rational()) throw ArithmeticError("Scalar: not rational: " + str());
  return a_;
}

int Scalar::sign() const {
  if (!is_real()) throw ArithmeticError("Scalar: sign of non-real value");
  int sa = sgn(a_);
  if (c_ == 0) return sa;
  int sc = sgn(c_);
  if (sa == 0) return sc;
  if (sa == sc) return sa;
  // a and c√d of opposite sign: compare a² with c²d.
  mpq_class diff = a_ * a_ - c_ * c_ * mpq_class(static_cast<long>(d_));
  return sa * sgn(diff);
}

std::string rat_str(const mpq_class& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

std::string Scalar::str() const {
  if (is_zero()) return "0";
  std::string out;
  auto append = [&out](const mpq_class& coef, const std::string& unit) {
    if (coef == 0) return;
    std::string c = rat_str(coef);
    bool neg = c[0] == '-';
    if (neg) c = c.substr(1);
    if (!unit.empty() && c == "1") c.clear();
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? "-" : "+";
    out += c + unit;
  };
  std::string rd = d_ ? "√" + std::to_string(d_) : "";
  append(a_, "");
  append(b_, "i");
  append(c_, rd);
  append(e_, rd + "i");
  return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.str();
}

namespace {

struct Cursor {
  std::string_view s;
  std::size_t p = 0;

  void skip_ws() {
    while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
  }
  bool eof() {
    skip_ws();
    return p >= s.size();
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
  // Unicode minus U+2212 is "\xe2\x88\x92", the radical sign is "\xe2\x88\x9a".
  bool eat_minus() {
    skip_ws();
    if (p < s.size() && s[p] == '-') {
      ++p;
      return true;
    }
    if (p + 2 < s.size() + 1 && s.substr(p, 3) == "\xe2\x88\x92") {
      p += 3;
      return true;
    }
    return false;
  }
  bool eat_radical() {
    skip_ws();
    if (s.substr(p, 3) == "\xe2\x88\x9a") {
      p += 3;
      return true;
    }
    if (s.substr(p, 4) == "sqrt") {
      p += 4;
      return true;
    }
    return false;
  }
  long long integer() {
    skip_ws();
    if (p >= s.size() || !std::isdigit(static_cast<unsigned char>(s[p])))
      throw ParseError("expected integer", p);
    long v = 0;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) {
      v = v * 10 + (s[p] - '0');
      ++p;
    }
    return v;
  }
};

mpq_class read_rational(Cursor& c) {
  long long num = c.integer();
  mpq_class q(static_cast<long>(num));
  if (c.eat('/')) {
    long long den = c.integer();
    if (den == 0) throw ParseError("zero denominator", c.p);
    q = mpq_class(static_cast<long>(num), static_cast<long>(den));
    q.canonicalize();
  }
  return q;
}

// One summand: optional rational coefficient followed by optional √d and/or i
// factors in either order ("2", "2i", "√5", "2√5i", "i√5").
Scalar read_term(Cursor& c) {
  mpq_class coef(1);
  bool have_coef = false;
  if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
    coef = read_rational(c);
    have_coef = true;
  }
  bool has_i = false;
  long long rad = 1;
  for (;;) {
    c.skip_ws();
    if (c.eat('*')) continue;
    if (!has_i && c.peek() == 'i') {
      c.eat('i');
      has_i = true;
      continue;
    }
    if (rad == 1 && c.eat_radical()) {
      bool paren = c.eat('(');
      rad = c.integer();
      if (paren && !c.eat(')')) throw ParseError("expected ')'", c.p);
      continue;
    }
    break;
  }
  if (!have_coef && !has_i && rad == 1)
    throw ParseError("expected term", c.p);
  Scalar v(coef);
  if (rad != 1) v *= Scalar::sqrt_int(rad);
  if (has_i) v *= Scalar::i();
  // Trailing rational divisor: "√5/2", "i/2".
  if (!have_coef && c.eat('/')) v /= Scalar(read_rational(c));
  return v;
}

Scalar read_expr(Cursor& c);

Scalar read_signed_term(Cursor& c) {
  bool neg = false;
  while (true) {
    if (c.eat_minus()) {
      neg = !neg;
      continue;
    }
    if (c.eat('+')) continue;
    break;
  }
  Scalar v;
  if (c.peek() == '(') {
    c.eat('(');
    v = read_expr(c);
    if (!c.eat(')')) throw ParseError("expected ')'", c.p);
    // allow (expr)/q
    if (c.eat('/')) v /= Scalar(read_rational(c));
  } else {
    v = read_term(c);
  }
  return neg ? -v : v;
}

Scalar read_expr(Cursor& c) {
  Scalar acc = read_signed_term(c);
  for (;;) {
    c.skip_ws();
    char ch = c.peek();
    bool minus = false;
    if (ch == '+') {
      c.eat('+');
    } else if (ch == '-' || c.s.substr(c.p, 3) == "\xe2\x88\x92") {
      c.eat_minus();
      minus = true;
    } else {
      break;
    }
    Scalar t = read_signed_term(c);
    acc = minus ? acc - t : acc + t;
  }
  return acc;
}

}  // namespace

mpq_class parse_rat(std::string_view text) {
  Cursor c{text};
  bool neg = c.eat_minus();
  mpq_class q = read_rational(c);
  if (!c.eof()) throw ParseError("trailing input in rational", c.p);
  return neg ? mpq_class(-q) : q;
}

Scalar Scalar::parse(std::string_view text) {
  Cursor c{text};
  Scalar v = read_expr(c);
  if (!c.eof()) throw ParseError("trailing input", c.p);
  return v;
}

}  // namespace ckit
