#include "doctest.h"

#include <cmath>
#include <random>
#include <string>

#include "fixtures.hpp"
#include "gravent/error.hpp"
#include "gravent/geometry.hpp"

using namespace gravent;
using namespace gravent::testing;

namespace {

SystemSetup collinear_pair() {
  SystemSetup s;
  s.masses.push_back({kM, {kX1a, 0, 0}, {kX1b, 0, 0}});
  s.masses.push_back({kM, {kX2a, 0, 0}, {kX2b, 0, 0}});
  return s;
}

Vec3 rotate(const Vec3& v, double a, double b) {
  // rotation about z by a, then about x by b
  const Vec3 r1{std::cos(a) * v[0] - std::sin(a) * v[1], std::sin(a) * v[0] + std::cos(a) * v[1], v[2]};
  return {r1[0], std::cos(b) * r1[1] - std::sin(b) * r1[2], std::sin(b) * r1[1] + std::cos(b) * r1[2]};
}

SystemSetup random_setup(std::size_t n, std::mt19937_64& rng) {
  // masses on a coarse lattice so every cross distance clears 1e-4 m
  SystemSetup s;
  for (std::size_t p = 0; p < n; ++p) {
    const Vec3 centre{static_cast<double>(p) * 6e-4, uniform(rng, -1e-4, 1e-4), uniform(rng, -1e-4, 1e-4)};
    const Vec3 offset{uniform(rng, -1.2e-4, 1.2e-4), uniform(rng, -1.2e-4, 1.2e-4), uniform(rng, -1.2e-4, 1.2e-4)};
    s.masses.push_back({uniform(rng, 0.5e-14, 2e-14),
                        {centre[0] - offset[0] / 2, centre[1] - offset[1] / 2, centre[2] - offset[2] / 2},
                        {centre[0] + offset[0] / 2, centre[1] + offset[1] / 2, centre[2] + offset[2] / 2}});
  }
  return s;
}

}  // namespace

TEST_SUITE("geometry") {

TEST_CASE("collinear distances") {
  const PairDistances d = pairwise_distances(collinear_pair());
  CHECK(d.at(0, 1, 0, 0) == doctest::Approx(4.5e-4).epsilon(1e-14));
  CHECK(d.at(0, 1, 0, 1) == doctest::Approx(5.5e-4).epsilon(1e-14));
  CHECK(d.at(0, 1, 1, 0) == doctest::Approx(3.5e-4).epsilon(1e-14));
  CHECK(d.at(0, 1, 1, 1) == doctest::Approx(4.5e-4).epsilon(1e-14));
  // reversed lookup swaps the branch roles
  CHECK(d.at(1, 0, 0, 1) == d.at(0, 1, 1, 0));
}

TEST_CASE("frozen phase rates and entangling phase") {
  const PairPhaseTable t = phase_table(collinear_pair());
  const BranchQuad q = t.at(0, 1);
  for (int i = 0; i < 4; ++i) CHECK(q[i] == doctest::Approx(kFrozenRates[i]).epsilon(1e-13));
  CHECK(entangling_phases(t)(0, 1) == doctest::Approx(kFrozenPhi).epsilon(1e-11));
  // G m^2 / (hbar d) with d = 4.5e-4
  const PhysicalConstants c;
  CHECK(c.G / c.hbar == doctest::Approx(kFrozenGOverHbar).epsilon(1e-14));
}

TEST_CASE("distance errors") {
  SystemSetup s = collinear_pair();
  s.masses[1].loc0 = {kX1b, 0, 0};
  try {
    pairwise_distances(s);
    FAIL("expected ZeroDistance");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroDistance);
    CHECK(std::string(e.what()).find("|1_1> and |0_2>") != std::string::npos);
  }
  s.masses[1].loc0 = {kX1b + 5e-5, 0, 0};
  try {
    pairwise_distances(s);
    FAIL("expected ThresholdViolation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ThresholdViolation);
  }
  s.min_pair_distance = 1e-5;
  CHECK_NOTHROW(pairwise_distances(s));
  SystemSetup one;
  one.masses.push_back({kM, {0, 0, 0}, {1, 0, 0}});
  CHECK_THROWS_AS(pairwise_distances(one), Error);
  SystemSetup neg = collinear_pair();
  neg.masses[0].mass_kg = -1.0;
  CHECK_THROWS_AS(phase_table(neg), Error);
}

TEST_CASE("validate_setup reports without throwing") {
  const SetupDiagnostics ok = validate_setup(collinear_pair());
  CHECK(ok.ok());
  CHECK(ok.min_cross_distance == doctest::Approx(3.5e-4));

  SystemSetup one;
  one.masses.push_back({kM, {0, 0, 0}, {1e-4, 0, 0}});
  const SetupDiagnostics d1 = validate_setup(one);
  REQUIRE(d1.violations.size() == 1);
  CHECK(d1.violations[0].kind == SetupViolation::Kind::TooFewMasses);
  CHECK(d1.violations[0].message.find("N >= 2 required") != std::string::npos);

  SystemSetup bad = collinear_pair();
  bad.masses[0].loc1 = bad.masses[0].loc0;
  bad.masses[1].loc0 = {2e-5, 0, 0};
  const SetupDiagnostics d2 = validate_setup(bad);
  CHECK_FALSE(d2.ok());
  bool coincident_branches = false, below = false;
  for (const auto& v : d2.violations) {
    coincident_branches |= v.kind == SetupViolation::Kind::CoincidentBranches;
    below |= v.kind == SetupViolation::Kind::BelowThreshold;
  }
  CHECK(coincident_branches);
  CHECK(below);
}

TEST_CASE("entangling phases are invariant under rigid motions") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const SystemSetup s = random_setup(4, rng);
    const PhaseMatrix base = entangling_phases(phase_table(s));
    const double a = uniform(rng, 0, 6.28), b = uniform(rng, 0, 6.28);
    const Vec3 shift{uniform(rng, -1, 1), uniform(rng, -1, 1), uniform(rng, -1, 1)};
    SystemSetup moved = s;
    for (MassSpec& m : moved.masses) {
      for (Vec3* v : {&m.loc0, &m.loc1}) {
        const Vec3 r = rotate(*v, a, b);
        *v = {r[0] + shift[0], r[1] + shift[1], r[2] + shift[2]};
      }
    }
    const PhaseMatrix after = entangling_phases(phase_table(moved));
    for (std::size_t p = 0; p < 4; ++p) {
      for (std::size_t q = p + 1; q < 4; ++q) {
        CHECK(after.oriented(p, q) == doctest::Approx(base.oriented(p, q)).epsilon(1e-6));
      }
    }
  }
}

TEST_CASE("swapping the branches of one mass flips the orientation only") {
  std::mt19937_64 rng(12);
  const SystemSetup s = random_setup(3, rng);
  SystemSetup swapped = s;
  std::swap(swapped.masses[1].loc0, swapped.masses[1].loc1);
  const PhaseMatrix a = entangling_phases(phase_table(s));
  const PhaseMatrix b = entangling_phases(phase_table(swapped));
  CHECK(b.oriented(0, 1) == doctest::Approx(-a.oriented(0, 1)));
  CHECK(b.oriented(1, 2) == doctest::Approx(-a.oriented(1, 2)));
  CHECK(b.oriented(0, 2) == doctest::Approx(a.oriented(0, 2)));
}

TEST_CASE("phase matrix round trip through a rate table") {
  const PhaseMatrix m = PhaseMatrix::from_rows({{0, 1.5, -0.5}, {1.5, 0, 2}, {-0.5, 2, 0}});
  CHECK(entangling_phases(PairPhaseTable::from_phase_matrix(m)) == m);
}

}
