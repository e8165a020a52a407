#include "doctest.h"

#include <cmath>

#include "gravent/error.hpp"
#include "gravent/phase_matrix.hpp"

using namespace gravent;

TEST_SUITE("phase_matrix") {

TEST_CASE("entries are stored symmetric with orientation") {
  PhaseMatrix m(3);
  m.set(0, 2, -1.5);
  CHECK(m(0, 2) == 1.5);
  CHECK(m(2, 0) == 1.5);
  CHECK(m.oriented(2, 0) == -1.5);
  CHECK(m(0, 0) == 0.0);
}

TEST_CASE("from_rows validates shape, diagonal, symmetry") {
  CHECK_NOTHROW(PhaseMatrix::from_rows({{0, 1}, {1, 0}}));
  CHECK_THROWS_AS(PhaseMatrix::from_rows({{0, 1}, {1}}), Error);
  CHECK_THROWS_AS(PhaseMatrix::from_rows({{1, 1}, {1, 0}}), Error);
  CHECK_THROWS_AS(PhaseMatrix::from_rows({{0, 1}, {2, 0}}), Error);
  CHECK_THROWS_AS(PhaseMatrix::from_rows({{0, NAN}, {NAN, 0}}), Error);
  CHECK_NOTHROW(PhaseMatrix::from_rows({{0, -2}, {-2, 0}}));
}

TEST_CASE("set rejects the diagonal and bad indices") {
  PhaseMatrix m(2);
  CHECK_THROWS_AS(m.set(1, 1, 1.0), Error);
  CHECK_THROWS_AS(m.set(0, 2, 1.0), Error);
  CHECK_THROWS_AS(m.set(0, 1, INFINITY), Error);
}

TEST_CASE("without and permuted") {
  const PhaseMatrix m = PhaseMatrix::from_rows({{0, 1, 2}, {1, 0, 3}, {2, 3, 0}});
  const PhaseMatrix w = m.without(1);
  REQUIRE(w.size() == 2);
  CHECK(w(0, 1) == 2.0);
  const PhaseMatrix p = m.permuted({2, 0, 1});
  CHECK(p(0, 1) == 2.0);
  CHECK(p(0, 2) == 3.0);
  CHECK(p(1, 2) == 1.0);
  CHECK_THROWS_AS(m.without(3), Error);
  CHECK(m.magnitudes()[1][2] == 3.0);
}

}
