#include "gravent/tangle_check.hpp"

#include <cmath>

#include "gravent/oracle.hpp"

namespace gravent {

ThreeTangleCheck check_three_tangle(const PhaseMatrix& phases, double t,
                                    closedform::TangleIndexing indexing) {
  ThreeTangleCheck out;
  out.t = t;
  out.indexing = indexing;
  out.published = closedform::three_tangle_published(phases, t, indexing);
  out.residual = oracle::three_tangle_residual(oracle::evolve(phases, t), 0);
  out.abs_difference = std::abs(out.published - out.residual);
  out.valid = out.abs_difference < kTangleAgreementTolerance;
  return out;
}

std::vector<ThreeTangleCheck> check_three_tangle_cases(const std::vector<ThreeTangleCase>& cases) {
  std::vector<ThreeTangleCheck> out;
  for (const ThreeTangleCase& c : cases) {
    for (auto indexing : {closedform::TangleIndexing::UnorderedThree, closedform::TangleIndexing::OrderedSix}) {
      out.push_back(check_three_tangle(c.phases, c.t, indexing));
    }
  }
  return out;
}

}  // namespace gravent
