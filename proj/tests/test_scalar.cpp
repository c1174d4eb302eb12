#include <doctest.h>

#include "support/fixtures.hpp"

using namespace ckit;

TEST_CASE("rationals normalize and print") {
  CHECK(Scalar::rational(6, 4).str() == "3/2");
  CHECK(Scalar::rational(-6, 4).str() == "-3/2");
  CHECK(Scalar::rational(0, 5).str() == "0");
  CHECK(Scalar(7).is_integer());
  CHECK(!Scalar::rational(1, 2).is_integer());
}

TEST_CASE("square roots reduce to square-free radicands") {
  CHECK(Scalar::sqrt_int(5).str() == "√5");
  CHECK(Scalar::sqrt_int(12) == Scalar(2) * Scalar::sqrt_int(3));
  CHECK(Scalar::sqrt_int(9) == Scalar(3));
  CHECK(Scalar::sqrt_int(12).quad_d() == 3);
  CHECK_THROWS_AS(Scalar::sqrt_int(0), ArithmeticError);
}

TEST_CASE("golden ratio satisfies its minimal polynomial") {
  Scalar phi = Scalar::parse("(1+√5)/2");
  CHECK(phi * phi - phi - Scalar(1) == Scalar(0));
  CHECK(phi.str() == "1/2+1/2√5");
  CHECK(phi * phi.galois() == Scalar(-1));
}

TEST_CASE("parse accepts the common spellings") {
  CHECK(Scalar::parse("3/2") == Scalar::rational(3, 2));
  CHECK(Scalar::parse("1+2i") == Scalar(1) + Scalar(2) * Scalar::i());
  CHECK(Scalar::parse("-i") == -Scalar::i());
  CHECK(Scalar::parse("2i") == Scalar(2) * Scalar::i());
  CHECK(Scalar::parse("sqrt(5)") == Scalar::sqrt_int(5));
  CHECK(Scalar::parse("sqrt5") == Scalar::sqrt_int(5));
  CHECK(Scalar::parse("2√5i") ==
        Scalar(2) * Scalar::sqrt_int(5) * Scalar::i());
  CHECK(Scalar::parse("i√5") == Scalar::i() * Scalar::sqrt_int(5));
  CHECK(Scalar::parse("√5/2") == Scalar::sqrt_int(5) / Scalar(2));
  CHECK(Scalar::parse("i/2") == Scalar::i() / Scalar(2));
  // Unicode minus.
  CHECK(Scalar::parse("\xe2\x88\x92""2") == Scalar(-2));
  CHECK_THROWS_AS(Scalar::parse("1+"), ParseError);
  CHECK_THROWS_AS(Scalar::parse("1/0"), ParseError);
}

TEST_CASE("print/parse round trip on random tower elements") {
  fixtures::Rng rng(7);
  for (long long d : {0, 2, 5}) {
    for (int k = 0; k < 50; ++k) {
      Scalar x = rng.scalar(d);
      CHECK(Scalar::parse(x.str()) == x);
    }
  }
}

TEST_CASE("field axioms hold exactly for 1000 random tower elements") {
  fixtures::Rng rng(11);
  int checked_inverse = 0;
  for (int k = 0; k < 1000; ++k) {
    long long d = std::vector<long long>{0, 2, 3, 5}[k % 4];
    Scalar a = rng.scalar(d), b = rng.scalar(d), c = rng.scalar(d);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == Scalar(1));
      ++checked_inverse;
    }
  }
  CHECK(checked_inverse > 900);
}

TEST_CASE("division by zero and tower mixing are errors") {
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), ArithmeticError);
  CHECK_THROWS_AS(Scalar(0).inverse(), ArithmeticError);
  CHECK_THROWS_AS(Scalar::sqrt_int(2) + Scalar::sqrt_int(3), ArithmeticError);
  CHECK_THROWS_AS(Scalar::sqrt_int(2) * Scalar::sqrt_int(5), ArithmeticError);
  // A quadratic scalar combines freely with rationals and i.
  CHECK((Scalar::sqrt_int(2) * Scalar::sqrt_int(2)) == Scalar(2));
  CHECK((Scalar::i() * Scalar::sqrt_int(2)).quad_d() == 2);
}

TEST_CASE("real/imaginary parts and conjugations") {
  Scalar z = Scalar::parse("1/2+3i+2√5+√5i");
  CHECK(z.real() == Scalar::parse("1/2+2√5"));
  CHECK(z.imag() == Scalar::parse("3+√5"));
  CHECK(z.conj() + z == Scalar(2) * z.real());
  CHECK(z * z.conj() == (z * z.conj()).real());
  CHECK(z.galois().galois() == z);
}

TEST_CASE("sign of real quadratic values via the positive embedding") {
  CHECK(Scalar::parse("(1+√5)/2").sign() == 1);
  CHECK(Scalar::parse("1-√5").sign() == -1);    // 1 < √5
  CHECK(Scalar::parse("3-√5").sign() == 1);     // 3 > √5
  CHECK(Scalar::parse("-3+√5").sign() == -1);
  CHECK(Scalar(0).sign() == 0);
  CHECK_THROWS_AS(Scalar::i().sign(), ArithmeticError);
}
