#include <doctest.h>

#include <random>

#include "quadcert/rational.hpp"
#include "support.hpp"

using namespace quadcert;
using quadcert::testing::draw_in;

TEST_CASE("construction keeps canonical form") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(2, 4).numerator() == 1);
  CHECK(Rational(2, 4).denominator() == 2);
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(1, -2).denominator() == 2);
  CHECK(Rational(0, 7).denominator() == 1);
  CHECK(Rational(-6, -4) == Rational(3, 2));
  CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("arithmetic is exact") {
  const Rational third(1, 3);
  CHECK(third + third + third == Rational(1));
  CHECK(Rational(1, 10) + Rational(2, 10) == Rational(3, 10));
  CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
  CHECK(Rational(7, 3) / Rational(7, 3) == Rational(1));
  CHECK(-Rational(2, 5) == Rational(-2, 5));
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
}

TEST_CASE("comparisons") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(Rational(5, 5) == Rational(1));
  CHECK(Rational(-3).sign() == -1);
  CHECK(Rational(0).sign() == 0);
  CHECK(Rational(2, 7).sign() == 1);
  CHECK(Rational(-2, 7).abs() == Rational(2, 7));
}

TEST_CASE("string round trip") {
  CHECK(Rational::from_string("3") == Rational(3));
  CHECK(Rational::from_string("-3/6") == Rational(-1, 2));
  CHECK(Rational::from_string("0.5") == Rational(1, 2));
  CHECK(Rational::from_string("-1.25") == Rational(-5, 4));
  CHECK(Rational::from_string(".5") == Rational(1, 2));
  CHECK(Rational::from_string("2.50") == Rational(5, 2));
  CHECK(Rational(3, 2).to_string() == "3/2");
  CHECK(Rational(-7).to_string() == "-7");

  CHECK_THROWS_AS(Rational::from_string("1/0"), SyntaxError);
  CHECK_THROWS_AS(Rational::from_string("1/-2"), SyntaxError);
  CHECK_THROWS_AS(Rational::from_string("1."), SyntaxError);
  CHECK_THROWS_AS(Rational::from_string(""), SyntaxError);
  CHECK_THROWS_AS(Rational::from_string("2x"), SyntaxError);

  std::mt19937_64 rng(42);
  for (int t = 0; t < 200; ++t) {
    const Rational r(draw_in(rng, -1000, 1000), draw_in(rng, 1, 1000));
    CHECK(Rational::from_string(r.to_string()) == r);
  }
}

TEST_CASE("decimals convert via base 10, not binary floats") {
  // 0.1 is not representable in binary; exact conversion must give 1/10.
  CHECK(Rational::from_string("0.1") == Rational(1, 10));
  CHECK(Rational::from_string("0.1").denominator() == 10);
}
