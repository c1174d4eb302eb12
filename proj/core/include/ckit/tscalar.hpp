#pragma once

#include <string>
#include <string_view>

#include "ckit/poly.hpp"

namespace ckit {

/// Rational function in one formal transcendental T with Scalar coefficients.
///
/// Lattice certificates need exact arithmetic with entries like π or
/// t_m = log α_m next to algebraic numbers; since those values are
/// transcendental over the scalar tower, treating T as an indeterminate is
/// faithful: an identity of rational functions holds iff it holds at T's
/// actual value.
class TScalar {
 public:
  TScalar() : num_(), den_(1) {}
  TScalar(long long n) : num_(n), den_(1) {}  // NOLINT
  explicit TScalar(const Scalar& s) : num_(s), den_(1) {}
  explicit TScalar(Poly p) : num_(std::move(p)), den_(1) {}
  TScalar(Poly num, Poly den);

  static TScalar t() { return TScalar(Poly::x()); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const {
    return num_.is_constant() && den_.is_constant();
  }
  Scalar constant() const { return num_.constant() / den_.constant(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  TScalar operator-() const { return TScalar(-num_, den_); }
  TScalar operator+(const TScalar& o) const {
    return TScalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  TScalar operator-(const TScalar& o) const { return *this + (-o); }
  TScalar operator*(const TScalar& o) const {
    return TScalar(num_ * o.num_, den_ * o.den_);
  }
  TScalar operator/(const TScalar& o) const {
    if (o.is_zero()) throw ArithmeticError("TScalar: division by zero");
    return TScalar(num_ * o.den_, den_ * o.num_);
  }
  TScalar& operator+=(const TScalar& o) { return *this = *this + o; }
  TScalar& operator-=(const TScalar& o) { return *this = *this - o; }
  TScalar& operator*=(const TScalar& o) { return *this = *this * o; }
  TScalar& operator/=(const TScalar& o) { return *this = *this / o; }

  bool operator==(const TScalar& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const TScalar& o) const { return !(*this == o); }

  std::string str() const;
  static TScalar parse(std::string_view text);

 private:
  Poly num_, den_;  // den monic, gcd(num, den) = 1
  void normalize();
};

}  // namespace ckit
