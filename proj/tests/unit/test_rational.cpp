#include "doctest.h"

#include "gravent/error.hpp"
#include "gravent/rational.hpp"

using namespace gravent;

TEST_SUITE("rational") {

TEST_CASE("normalisation and parsing") {
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(0, 5) == Rational(0, 1));
  CHECK(Rational::parse("3/2") == Rational(3, 2));
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational(3, 2).to_string() == "3/2");
  CHECK(Rational(4).to_string() == "4");
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("x"), Error);
  CHECK_THROWS_AS(Rational::parse("1/2/3"), Error);
  CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("arithmetic") {
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
  CHECK(Rational(-1, 3).abs() == Rational(1, 3));
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
  CHECK_THROWS_AS(Rational(INT64_MAX / 2) * Rational(4), Error);
}

TEST_CASE("rational phases") {
  const RationalPhases rp(0.5, {{Rational(0), Rational(3)}, {Rational(3), Rational(0)}});
  CHECK(rp.to_phase_matrix()(0, 1) == doctest::Approx(1.5));
  CHECK_THROWS_AS(RationalPhases(0.0, {{Rational(0)}}), Error);
  CHECK_THROWS_AS(RationalPhases(1.0, {{Rational(0), Rational(1)}, {Rational(2), Rational(0)}}), Error);
  CHECK_THROWS_AS(RationalPhases(1.0, {{Rational(1), Rational(1)}, {Rational(1), Rational(0)}}), Error);
}

}
