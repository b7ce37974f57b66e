#include <leibniz/errors.hpp>
#include <leibniz/rational.hpp>
#include <leibniz/rng.hpp>

#include "doctest.h"

using leibniz::Rational;

TEST_CASE("rational arithmetic stays in lowest terms") {
  Rational a(2, 4);
  CHECK(a.str() == "1/2");
  CHECK(a == Rational(1, 2));
  Rational b(3, -6);
  CHECK(b.str() == "-1/2");
  CHECK((a + b).is_zero());
  CHECK((a * b).str() == "-1/4");
  CHECK((a - b).str() == "1");
  CHECK((a / b).str() == "-1");
  CHECK((-a).str() == "-1/2");
  CHECK(Rational(7).is_integer());
  CHECK_FALSE(a.is_integer());
  CHECK(Rational(-3, 7).abs() == Rational(3, 7));
  CHECK(Rational(2, 3).inverse() == Rational(3, 2));
  CHECK(Rational(0).sign() == 0);
  CHECK(Rational(-5).sign() == -1);
  CHECK(Rational(1, 9).sign() == 1);
  CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("rational construction and division reject zero denominators") {
  CHECK_THROWS_AS(Rational(1, 0), leibniz::Error);
  Rational a(5);
  CHECK_THROWS_AS(a /= Rational(0), leibniz::Error);
  CHECK_THROWS_AS(Rational(0).inverse(), leibniz::Error);
}

TEST_CASE("rational parse/str round trip") {
  for (const char* s : {"0", "1", "-1", "7/3", "-22/7", "1000000000000/7"}) {
    CHECK(Rational::parse(s).str() == s);
  }
  CHECK(Rational::parse("3/-6").str() == "-1/2");
  CHECK(Rational::parse("04/8").str() == "1/2");
  CHECK_THROWS_AS(Rational::parse(""), leibniz::ParseError);
  CHECK_THROWS_AS(Rational::parse("1/0"), leibniz::ParseError);
  CHECK_THROWS_AS(Rational::parse("a"), leibniz::ParseError);
  CHECK_THROWS_AS(Rational::parse("1.5"), leibniz::ParseError);
  CHECK_THROWS_AS(Rational::parse("1/2/3"), leibniz::ParseError);
  CHECK_THROWS_AS(Rational::parse("1 /2"), leibniz::ParseError);
}

TEST_CASE("square detection and exact square roots") {
  CHECK(Rational(9, 4).is_square());
  CHECK(Rational(9, 4).sqrt() == Rational(3, 2));
  CHECK(Rational(0).is_square());
  CHECK(Rational(0).sqrt().is_zero());
  CHECK(Rational(1).sqrt().is_one());
  CHECK_FALSE(Rational(2).is_square());
  CHECK_FALSE(Rational(-9, 4).is_square());
  CHECK(Rational(8, 2).is_square());  // canonicalizes to 4
}

TEST_CASE("squarefree kernel: sign-carrying squarefree part") {
  CHECK(Rational(12).squarefree_kernel() == Rational(3));
  CHECK(Rational(50).squarefree_kernel() == Rational(2));
  CHECK(Rational(-8).squarefree_kernel() == Rational(-2));
  CHECK(Rational(9, 4).squarefree_kernel().is_one());
  CHECK(Rational(5, 8).squarefree_kernel() == Rational(10));
  CHECK(Rational(0).squarefree_kernel().is_zero());

  // Property: v / kernel is always the square of a rational.
  leibniz::Rng rng(1234);
  for (int i = 0; i < 200; ++i) {
    Rational v = rng.rational(-40, 40);
    if (v.is_zero()) continue;
    Rational k = v.squarefree_kernel();
    CHECK(k.is_integer());
    CHECK((v / k).is_square());
  }
}

TEST_CASE("binomial coefficients are exact") {
  CHECK(leibniz::binomial(0, 0).is_one());
  CHECK(leibniz::binomial(6, 2) == Rational(15));
  CHECK(leibniz::binomial(10, 5) == Rational(252));
  CHECK(leibniz::binomial(3, 5).is_zero());
  CHECK(leibniz::binomial(60, 30) == Rational::parse("118264581564861424"));
}

TEST_CASE("rng produces values inside the requested ranges") {
  leibniz::Rng rng(99);
  for (int i = 0; i < 200; ++i) {
    long n = rng.integer(-4, 9);
    CHECK(n >= -4);
    CHECK(n <= 9);
    Rational q = rng.rational(-5, 5);
    CHECK(q >= Rational(-5));
    CHECK(q <= Rational(5));
    Rational nz = rng.nonzero_rational(-5, 5);
    CHECK_FALSE(nz.is_zero());
  }
  // Determinism: same seed, same stream.
  leibniz::Rng a(7), b(7);
  for (int i = 0; i < 32; ++i) CHECK(a.next_u64() == b.next_u64());
}
