#pragma once

#include <string>
#include <vector>

#include "ckit/scalar.hpp"

namespace ckit {

/// Dense univariate polynomial over Scalar.
class Poly {
 public:
  Poly() {}
  Poly(long long n) { set_coeff(0, Scalar(n)); }  // NOLINT
  explicit Poly(const Scalar& s) { set_coeff(0, s); }
  static Poly x() {
    Poly p;
    p.set_coeff(1, Scalar(1));
    return p;
  }
  static Poly monomial(int k, const Scalar& c) {
    Poly p;
    p.set_coeff(k, c);
    return p;
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  Scalar coeff(int k) const {
    return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Scalar(0);
  }
  Scalar constant() const;  // throws unless is_constant()
  Scalar leading() const { return is_zero() ? Scalar(0) : c_.back(); }
  void set_coeff(int k, const Scalar& v);

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly scaled(const Scalar& s) const;
  Poly derivative() const;
  Scalar eval(const Scalar& at) const;

  /// Quotient and remainder; divisor must be nonzero.
  static void divmod(const Poly& num, const Poly& den, Poly& q, Poly& r);
  /// Exact quotient; throws ArithmeticError when the division has remainder.
  Poly exact_div(const Poly& den) const;

  /// Monic gcd.
  static Poly gcd(Poly a, Poly b);

  std::string str(const std::string& var = "T") const;

 private:
  std::vector<Scalar> c_;  // c_[k] = coefficient of x^k; no trailing zeros
  void trim();
};

/// Number of distinct real roots of p (coefficients must be real scalars,
/// embedded via √d > 0), by Sturm's theorem.
int count_real_roots(const Poly& p);

}  // namespace ckit
