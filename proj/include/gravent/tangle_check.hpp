#pragma once

#include <string>
#include <vector>

#include "gravent/closedform.hpp"
#include "gravent/phase_matrix.hpp"

namespace gravent {

/// Published 3-tangle expression evaluated next to the monogamy residual.
struct ThreeTangleCheck {
  double t = 0.0;
  closedform::TangleIndexing indexing = closedform::TangleIndexing::UnorderedThree;
  double published = 0.0;
  double residual = 0.0;  // authoritative
  double abs_difference = 0.0;
  bool valid = false;     // abs_difference below tolerance
};

inline constexpr double kTangleAgreementTolerance = 1e-9;

ThreeTangleCheck check_three_tangle(const PhaseMatrix& phases, double t,
                                    closedform::TangleIndexing indexing);

struct ThreeTangleCase {
  std::string label;
  PhaseMatrix phases;
  double t;
};

/// Both indexings for every case.
std::vector<ThreeTangleCheck> check_three_tangle_cases(const std::vector<ThreeTangleCase>& cases);

}  // namespace gravent
