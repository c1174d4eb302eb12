#include "ckit/poly.hpp"

#include <sstream>

namespace ckit {

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void Poly::set_coeff(int k, const Scalar& v) {
  if (k < 0) throw DomainError("Poly: negative exponent");
  if (k >= static_cast<int>(c_.size())) c_.resize(k + 1, Scalar(0));
  c_[k] = v;
  trim();
}

Scalar Poly::constant() const {
  if (!is_constant()) throw ArithmeticError("Poly: not a constant: " + str());
  return coeff(0);
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& v : p.c_) v = -v;
  return p;
}

Poly Poly::operator+(const Poly& o) const {
  Poly p;
  p.c_.resize(std::max(c_.size(), o.c_.size()), Scalar(0));
  for (std::size_t k = 0; k < p.c_.size(); ++k)
    p.c_[k] = coeff(static_cast<int>(k)) + o.coeff(static_cast<int>(k));
  p.trim();
  return p;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  Poly p;
  p.c_.assign(c_.size() + o.c_.size() - 1, Scalar(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      p.c_[i + j] += c_[i] * o.c_[j];
  }
  p.trim();
  return p;
}

Poly Poly::scaled(const Scalar& s) const {
  Poly p = *this;
  for (auto& v : p.c_) v *= s;
  p.trim();
  return p;
}

Poly Poly::derivative() const {
  Poly p;
  for (int k = 1; k <= degree(); ++k)
    p.set_coeff(k - 1, coeff(k) * Scalar(k));
  return p;
}

Scalar Poly::eval(const Scalar& at) const {
  Scalar v(0);
  for (int k = degree(); k >= 0; --k) v = v * at + coeff(k);
  return v;
}

void Poly::divmod(const Poly& num, const Poly& den, Poly& q, Poly& r) {
  if (den.is_zero()) throw ArithmeticError("Poly: division by zero");
  q = Poly();
  r = num;
  Scalar lead_inv = den.leading().inverse();
  while (!r.is_zero() && r.degree() >= den.degree()) {
    int k = r.degree() - den.degree();
    Scalar f = r.leading() * lead_inv;
    q.set_coeff(k, q.coeff(k) + f);
    r -= den * Poly::monomial(k, f);
  }
}

Poly Poly::exact_div(const Poly& den) const {
  Poly q, r;
  divmod(*this, den, q, r);
  if (!r.is_zero())
    throw ArithmeticError("Poly: inexact division: (" + str() + ")/(" +
                          den.str() + ")");
  return q;
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly q, r;
    divmod(a, b, q, r);
    a = b;
    b = r;
  }
  if (a.is_zero()) return a;
  return a.scaled(a.leading().inverse());
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Scalar c = coeff(k);
    if (c.is_zero()) continue;
    std::string cs = c.str();
    bool neg = cs[0] == '-';
    if (neg) cs = cs.substr(1);
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? "-" : "+");
    }
    bool needs_coeff = (k == 0) || cs != "1";
    bool composite = cs.find('+') != std::string::npos ||
                     cs.find('-') != std::string::npos;
    if (needs_coeff) {
      if (composite) os << "(" << cs << ")";
      else os << cs;
    }
    if (k > 0) {
      if (needs_coeff) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

namespace {

int sign_variations(const std::vector<int>& signs) {
  int v = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

}  // namespace

int count_real_roots(const Poly& p) {
  if (p.is_zero()) throw DomainError("count_real_roots: zero polynomial");
  // Square-free part keeps the root set and keeps Sturm honest.
  Poly sf = p;
  Poly d = p.derivative();
  if (!d.is_zero()) {
    Poly g = Poly::gcd(p, d);
    if (g.degree() > 0) sf = p.exact_div(g);
  }
  if (sf.degree() == 0) return 0;
  std::vector<Poly> chain{sf, sf.derivative()};
  while (!chain.back().is_zero()) {
    Poly q, r;
    Poly::divmod(chain[chain.size() - 2], chain.back(), q, r);
    chain.push_back(-r);
  }
  chain.pop_back();
  std::vector<int> at_minus, at_plus;
  for (const Poly& f : chain) {
    if (f.is_zero()) continue;
    int lead = f.leading().sign();
    at_plus.push_back(lead);
    at_minus.push_back(f.degree() % 2 == 0 ? lead : -lead);
  }
  return sign_variations(at_minus) - sign_variations(at_plus);
}

}  // namespace ckit
