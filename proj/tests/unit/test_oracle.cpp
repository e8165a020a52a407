#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "fixtures.hpp"
#include "gravent/error.hpp"
#include "gravent/oracle.hpp"

using namespace gravent;
using namespace gravent::oracle;
using namespace gravent::testing;

namespace {

constexpr double kPi = std::numbers::pi;

DensityMatrix bell_mixture(double p) {
  // p |Phi+><Phi+| + (1 - p) I / 4
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Identity(4, 4) * ((1.0 - p) / 4.0);
  rho(0, 0) += p / 2;
  rho(3, 3) += p / 2;
  rho(0, 3) += p / 2;
  rho(3, 0) += p / 2;
  return DensityMatrix(rho);
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("two-mass amplitudes") {
  PairPhaseTable table(2);
  table.set(0, 1, {0.1, 0.2, 0.3, 0.4});
  const double t = 2.0;
  const StateVector s = evolve(table, t);
  CHECK(s.norm_squared() == doctest::Approx(1.0));
  // bit p of the index is j_p
  const double rate[4] = {0.1, 0.3, 0.2, 0.4};  // index = j0 + 2 j1, quad = 2 j0 + j1
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(std::abs(s[i] - 0.5 * std::polar(1.0, rate[i] * t)) < 1e-15);
  }
}

TEST_CASE("evolved states stay normalised") {
  std::mt19937_64 rng(3);
  for (std::size_t n = 1; n <= 10; ++n) {
    const StateVector s = evolve(random_phases(std::max<std::size_t>(n, 1), rng), uniform(rng, 0, 10));
    CHECK(s.norm_squared() == doctest::Approx(1.0).epsilon(1e-13));
  }
}

TEST_CASE("local rates do not change entanglement") {
  // the same entangling phase carried by different rate tables
  PairPhaseTable a(2), b(2);
  a.set(0, 1, {0.0, 1.3, 0.0, 0.0});
  b.set(0, 1, {0.4, 1.0, 0.9, 0.2});  // 1.0 + 0.9 - 0.4 - 0.2 = 1.3
  for (double t : {0.3, 1.7, 4.0}) {
    CHECK(pair_concurrence(evolve(a, t), 0, 1) == doctest::Approx(pair_concurrence(evolve(b, t), 0, 1)));
  }
}

TEST_CASE("reduced density and purity") {
  const PhaseMatrix zero(3);
  const StateVector product = evolve(zero, 1.0);
  for (MassMask m : {MassMask{1}, MassMask{3}, MassMask{5}}) {
    const DensityMatrix rho = reduced_density(product, m);
    CHECK(rho.matrix().trace().real() == doctest::Approx(1.0));
    CHECK(purity(rho) == doctest::Approx(1.0));
  }
  const double phi = 1.0;
  const PhaseMatrix ghz = PhaseMatrix::from_rows({{0, phi, phi}, {phi, 0, phi}, {phi, phi, 0}});
  const StateVector g = evolve(ghz, kPi / phi);
  for (MassMask m : {MassMask{1}, MassMask{2}, MassMask{4}}) {
    CHECK(purity(reduced_density(g, m)) == doctest::Approx(0.5).epsilon(1e-12));
  }
  CHECK(three_tangle_residual(g, 0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(three_tangle_residual(product, 0)) < 1e-15);
  CHECK_THROWS_AS(reduced_density(g, 0), Error);
  CHECK_THROWS_AS(reduced_density(g, 7), Error);
}

TEST_CASE("Wootters concurrence on known mixed states") {
  CHECK(wootters_concurrence(bell_mixture(1.0)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(wootters_concurrence(bell_mixture(0.0)) == doctest::Approx(0.0));
  for (double p : {0.2, 1.0 / 3.0, 0.5, 0.8}) {
    CHECK(wootters_concurrence(bell_mixture(p)) == doctest::Approx(std::max(0.0, (3 * p - 1) / 2)));
  }
  CHECK_THROWS_AS(wootters_concurrence(DensityMatrix(Eigen::MatrixXcd::Identity(2, 2) / 2.0)), Error);
  CHECK_THROWS_AS(DensityMatrix(Eigen::MatrixXcd::Identity(3, 3) / 3.0), Error);
  CHECK_THROWS_AS(DensityMatrix(Eigen::MatrixXcd::Identity(2, 2)), Error);
}

TEST_CASE("two-mass concurrence matches the sine law") {
  for (double t : {0.0, 0.4, 1.0, 2.5}) {
    const PhaseMatrix m = PhaseMatrix::from_rows({{0, 1.7}, {1.7, 0}});
    CHECK(pair_concurrence(evolve(m, t), 0, 1) == doctest::Approx(std::abs(std::sin(1.7 * t / 2))));
  }
}

TEST_CASE("I-concurrence and Q_k from purities") {
  const double phi = 1.0;
  const PhaseMatrix ghz = PhaseMatrix::from_rows({{0, phi, phi}, {phi, 0, phi}, {phi, phi, 0}});
  const StateVector g = evolve(ghz, kPi);
  CHECK(iconcurrence_oracle(g, Bipartition(3, 1)) == doctest::Approx(1.0));
  CHECK(qk_from_purities(g, 1) == doctest::Approx(1.0));
  CHECK(qk_from_purities(evolve(ghz, 0.0), 1) == doctest::Approx(0.0));
  CHECK_THROWS_AS(qk_from_purities(g, 2), Error);
}

TEST_CASE("qubit cap") {
  CHECK_THROWS_AS(evolve(PhaseMatrix(5), 1.0, 4), Error);
  try {
    evolve(PhaseMatrix(25), 1.0);
    FAIL("expected TooManyQubits");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooManyQubits);
  }
}

}
