#include <doctest.h>

#include "mwav/rational.hpp"

using mwav::Rational;

TEST_CASE("rationals normalise on construction") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, 4) == Rational(1, -2));
  CHECK(Rational(3, -6).num() == -1);
  CHECK(Rational(3, -6).den() == 2);
  CHECK(Rational(0, 7) == Rational(0));
  CHECK_THROWS_AS(Rational(1, 0), mwav::contract_error);
}

TEST_CASE("arithmetic is exact") {
  Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(-a == Rational(-1, 3));
  CHECK_THROWS_AS(a / Rational(0), mwav::contract_error);

  Rational sum;
  for (int i = 0; i < 7; ++i) sum += Rational(1, 7);
  CHECK(sum == Rational(1));
}

TEST_CASE("ordering crosses denominators") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(7, 2) > Rational(3));
  CHECK(Rational(2, 4) <= Rational(1, 2));
  CHECK(Rational(2, 4) >= Rational(1, 2));
}

TEST_CASE("parse and print round-trip") {
  CHECK(Rational::parse("7/2") == Rational(7, 2));
  CHECK(Rational::parse("-3/9") == Rational(-1, 3));
  CHECK(Rational::parse("5") == Rational(5));
  CHECK(Rational(7, 2).str() == "7/2");
  CHECK(Rational(4, 2).str() == "2");
  CHECK(Rational(-1, 3).str() == "-1/3");
  CHECK_THROWS_AS(Rational::parse(""), mwav::contract_error);
  CHECK_THROWS_AS(Rational::parse("1.5"), mwav::contract_error);
  CHECK_THROWS_AS(Rational::parse("a/b"), mwav::contract_error);
  CHECK_THROWS_AS(Rational::parse("1/"), mwav::contract_error);
}

TEST_CASE("overflow is detected, not wrapped") {
  Rational huge(INT64_MAX, 1);
  CHECK_THROWS_AS(huge * Rational(2), mwav::contract_error);
  CHECK_NOTHROW(huge * Rational(1));
}
