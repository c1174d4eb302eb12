#include <doctest.h>

#include "ckit/poly.hpp"
#include "ckit/tscalar.hpp"
#include "support/fixtures.hpp"

using namespace ckit;

TEST_CASE("determinant, rank and inverse over the scalar field") {
  SMat m{{Scalar(1), Scalar(2)}, {Scalar(3), Scalar(4)}};
  CHECK(m.det() == Scalar(-2));
  CHECK(m.rank() == 2);
  auto inv = m.inverse();
  REQUIRE(inv);
  CHECK(*inv * m == SMat::identity(2));

  SMat s{{Scalar(1), Scalar(2)}, {Scalar(2), Scalar(4)}};
  CHECK(s.rank() == 1);
  CHECK(s.det() == Scalar(0));
  CHECK(!s.inverse());
}

TEST_CASE("random inverses over quadratic extensions") {
  fixtures::Rng rng(3);
  for (int k = 0; k < 25; ++k) {
    int n = static_cast<int>(rng.integer(2, 5));
    SMat m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = rng.scalar(5, false);
    if (m.det().is_zero()) continue;
    auto inv = m.inverse();
    REQUIRE(inv);
    CHECK(m * *inv == SMat::identity(n));
  }
}

TEST_CASE("kernel and solve") {
  SMat m{{Scalar(1), Scalar(2), Scalar(3)}, {Scalar(2), Scalar(4), Scalar(6)}};
  auto ker = m.kernel();
  CHECK(ker.size() == 2);
  for (const auto& v : ker) CHECK(vec_is_zero(m.apply(v)));

  SMat a{{Scalar(2), Scalar(0)}, {Scalar(0), Scalar(4)}};
  auto x = a.solve({Scalar(1), Scalar(2)});
  REQUIRE(x);
  CHECK((*x)[0] == Scalar::rational(1, 2));
  CHECK((*x)[1] == Scalar::rational(1, 2));
  CHECK_THROWS_AS(a.solve({Scalar(1), Scalar(2), Scalar(3)}), DomainError);
  SMat sing{{Scalar(1), Scalar(1)}, {Scalar(1), Scalar(1)}};
  CHECK(!sing.solve({Scalar(0), Scalar(1)}));
}

TEST_CASE("polynomial division, gcd and printing") {
  Poly x = Poly::x();
  Poly p = (x - Poly(1)) * (x - Poly(2));
  Poly q = (x - Poly(1)) * (x + Poly(3));
  CHECK(Poly::gcd(p, q).str() == "T-1");
  CHECK(p.exact_div(x - Poly(2)) == x - Poly(1));
  CHECK_THROWS_AS(p.exact_div(x - Poly(5)), ArithmeticError);
  CHECK(p.str("T") == "T^2-3*T+2");
}

TEST_CASE("Sturm real-root counts") {
  Poly x = Poly::x();
  CHECK(count_real_roots(x * x - Poly(2)) == 2);
  CHECK(count_real_roots(x * x + Poly(1)) == 0);
  CHECK(count_real_roots(x * x) == 1);  // square-free reduction
  CHECK(count_real_roots((x - Poly(1)) * (x - Poly(2)) * (x + Poly(7))) == 3);
  // Coefficients in Q(√2): (x − √2)(x + 1) has two real roots.
  Poly p;
  p.set_coeff(2, Scalar(1));
  p.set_coeff(1, Scalar(1) - Scalar::sqrt_int(2));
  p.set_coeff(0, -Scalar::sqrt_int(2));
  CHECK(count_real_roots(p) == 2);
}

TEST_CASE("rational functions in a formal transcendental") {
  TScalar t = TScalar::t();
  TScalar r = (t * t - TScalar(1)) / (t - TScalar(1));
  CHECK(r == t + TScalar(1));
  CHECK(r.str() == "T+1");
  CHECK((TScalar(1) / t).str() == "(1)/(T)");
  CHECK(TScalar::parse("(1)/(T)") * t == TScalar(1));
  CHECK(TScalar::parse("2*T^2-1/2") ==
        TScalar(2) * t * t - TScalar(Scalar::rational(1, 2)));
  CHECK(TScalar::parse("-1/T") == -TScalar(1) / t);
  CHECK(TScalar(Scalar::sqrt_int(5)).is_constant());
  CHECK(!t.is_constant());
  CHECK_THROWS_AS(t / TScalar(0), ArithmeticError);
}

TEST_CASE("matrix algebra over rational functions") {
  TScalar t = TScalar::t();
  Mat<TScalar> m(2, 2);
  m.at(0, 0) = t;
  m.at(0, 1) = TScalar(1);
  m.at(1, 1) = TScalar(1) / t;
  auto inv = m.inverse();
  REQUIRE(inv);
  CHECK(*inv * m == Mat<TScalar>::identity(2));
  CHECK(m.det() == TScalar(1));
}
