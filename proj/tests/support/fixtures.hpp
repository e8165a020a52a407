#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "gravent/phase_matrix.hpp"

namespace gravent::testing {

inline PhaseMatrix random_phases(std::size_t n, std::mt19937_64& rng, double lo = 0.0, double hi = 5.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  PhaseMatrix m(n);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) m.set(p, q, dist(rng));
  }
  return m;
}

/// Like random_phases but every entry gets a random orientation sign.
inline PhaseMatrix random_signed_phases(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(0.0, 5.0);
  std::bernoulli_distribution flip(0.5);
  PhaseMatrix m(n);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) m.set(p, q, flip(rng) ? -dist(rng) : dist(rng));
  }
  return m;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Collinear two-mass setup with the branch positions used throughout the
/// geometry tests (meters).
inline constexpr double kM = 1e-14;
inline constexpr double kX1a = 0.0, kX1b = 1e-4, kX2a = 4.5e-4, kX2b = 5.5e-4;

/// Frozen reference values for that setup with G = 6.674e-11 and
/// hbar = 1.054571817e-34, computed independently in double precision.
inline constexpr double kFrozenRates[4] = {0.14063633099262987, 0.11506608899396989, 0.18081813984766698,
                                           0.14063633099262987};
inline constexpr double kFrozenPhi = 0.01461156685637711;
inline constexpr double kFrozenGOverHbar = 6.328634894668344e+23;

}  // namespace gravent::testing
