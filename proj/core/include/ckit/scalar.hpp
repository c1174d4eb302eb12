#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

#include "ckit/errors.hpp"

namespace ckit {

/// Exact element of the field tower Q ⊂ Q(i), Q(√d), Q(i,√d).
///
/// A value is stored as  a + b·i + c·√d + e·i·√d  with a,b,c,e ∈ Q and d a
/// square-free integer > 1 (d == 0 when the value has no quadratic part).
/// All arithmetic is exact; operations that would leave the tower (mixing two
/// different square roots, dividing by zero) throw ArithmeticError.
class Scalar {
 public:
  Scalar() : d_(0) {}
  Scalar(long long n) : a_(static_cast<long>(n)), d_(0) {}  // NOLINT: implicit by design
  explicit Scalar(const mpq_class& q) : a_(q), d_(0) { a_.canonicalize(); }

  /// p/q as a rational scalar. q must be nonzero.
  static Scalar rational(long long p, long long q);
  /// The imaginary unit.
  static Scalar i();
  /// √n for integer n > 0, reduced so the radicand is square-free
  /// (√12 = 2√3, √9 = 3).
  static Scalar sqrt_int(long long n);
  /// Direct constructor from the four rational components and radicand.
  static Scalar make(mpq_class a, mpq_class b, mpq_class c, mpq_class e,
                     long long d);

  bool is_zero() const { return a_ == 0 && b_ == 0 && c_ == 0 && e_ == 0; }
  bool is_rational() const { return b_ == 0 && c_ == 0 && e_ == 0; }
  bool is_real() const { return b_ == 0 && e_ == 0; }
  bool is_integer() const;
  bool is_one() const { return is_rational() && a_ == 1; }

  /// Rational value; throws unless is_rational().
  mpq_class rat() const;

  /// Real and imaginary parts (real scalars: Re = a + c√d, Im = b + e√d).
  Scalar real() const { return make(a_, 0, c_, 0, d_); }
  Scalar imag() const { return make(b_, 0, e_, 0, d_); }
  /// Complex conjugate (i ↦ −i).
  Scalar conj() const { return make(a_, -b_, c_, -e_, d_); }
  /// Galois conjugate (√d ↦ −√d).
  Scalar galois() const { return make(a_, b_, -c_, -e_, d_); }

  /// Sign of a real scalar under the embedding √d > 0. Throws if not real.
  int sign() const;

  /// Radicand of the quadratic part; 0 when the value is Gaussian rational.
  long long quad_d() const { return d_; }
  const mpq_class& part_a() const { return a_; }
  const mpq_class& part_b() const { return b_; }
  const mpq_class& part_c() const { return c_; }
  const mpq_class& part_e() const { return e_; }

  Scalar operator-() const { return make(-a_, -b_, -c_, -e_, d_); }
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  Scalar inverse() const;
  Scalar pow(long long k) const;

  bool operator==(const Scalar& o) const {
    return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && e_ == o.e_ && d_ == o.d_;
  }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Canonical text form, e.g. "3/2", "-i", "1+2i", "1/2+1/2√5".
  std::string str() const;
  /// Parses the printer's output plus common literature spellings
  /// ("(1+√5)/2", "sqrt(5)", unicode minus).
  static Scalar parse(std::string_view text);

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

 private:
  // value = a + b i + c √d + e i √d
  mpq_class a_, b_, c_, e_;
  long long d_;

  void normalize();
  static long long join_d(const Scalar& x, const Scalar& y);
};

inline Scalar operator*(long long n, const Scalar& s) { return Scalar(n) * s; }

/// Square-free decomposition n = s²·d of a positive integer.
struct SquareFree {
  long long square_root;  // s
  long long radicand;     // d, square-free
};
SquareFree square_free_split(long long n);

std::string rat_str(const mpq_class& q);
mpq_class parse_rat(std::string_view text);

}  // namespace ckit
