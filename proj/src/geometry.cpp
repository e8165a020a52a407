#include "gravent/geometry.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "gravent/error.hpp"

namespace gravent {

namespace {

std::string branch_label(std::size_t p, int j) {
  return "|" + std::to_string(j) + "_" + std::to_string(p + 1) + ">";
}

bool finite(const Vec3& v) {
  return std::isfinite(v[0]) && std::isfinite(v[1]) && std::isfinite(v[2]);
}

const Vec3& branch(const MassSpec& m, int j) { return j == 0 ? m.loc0 : m.loc1; }

void require_valid_masses(const SystemSetup& setup) {
  if (setup.size() < 2) {
    throw Error(ErrorCode::InvalidArgument, "at least two masses are required");
  }
  if (!(setup.min_pair_distance > 0.0) || !std::isfinite(setup.min_pair_distance)) {
    throw Error(ErrorCode::InvalidArgument, "min_pair_distance must be positive");
  }
  for (std::size_t p = 0; p < setup.size(); ++p) {
    const MassSpec& m = setup.masses[p];
    if (!(m.mass_kg > 0.0) || !std::isfinite(m.mass_kg)) {
      throw Error(ErrorCode::InvalidArgument, "mass " + std::to_string(p + 1) + " must be positive");
    }
    if (!finite(m.loc0) || !finite(m.loc1)) {
      throw Error(ErrorCode::InvalidArgument,
                  "mass " + std::to_string(p + 1) + " has non-finite coordinates");
    }
    if (distance(m.loc0, m.loc1) == 0.0) {
      throw Error(ErrorCode::InvalidArgument,
                  "branches of mass " + std::to_string(p + 1) + " coincide");
    }
  }
}

}  // namespace

double distance(const Vec3& a, const Vec3& b) noexcept {
  return std::hypot(a[0] - b[0], a[1] - b[1], a[2] - b[2]);
}

std::size_t pair_count(std::size_t n) noexcept { return n < 2 ? 0 : n * (n - 1) / 2; }

std::size_t pair_index(std::size_t n, std::size_t p, std::size_t q) {
  if (p >= q || q >= n) {
    throw Error(ErrorCode::IndexError, "pair index requires p < q < n");
  }
  // rows 0..p-1 contribute (n-1) + (n-2) + ... + (n-p) entries
  return p * (2 * n - p - 1) / 2 + (q - p - 1);
}

BranchQuad PairQuadTable::at(std::size_t p, std::size_t q) const {
  if (p == q) {
    throw Error(ErrorCode::IndexError, "pair of identical masses");
  }
  if (p < q) {
    return quads_[pair_index(n_, p, q)];
  }
  const BranchQuad& s = quads_[pair_index(n_, q, p)];
  return {s[0], s[2], s[1], s[3]};
}

double PairQuadTable::at(std::size_t p, std::size_t q, int jp, int jq) const {
  return at(p, q)[2 * jp + jq];
}

void PairQuadTable::set(std::size_t p, std::size_t q, const BranchQuad& quad) {
  if (p == q) {
    throw Error(ErrorCode::IndexError, "pair of identical masses");
  }
  if (p < q) {
    quads_[pair_index(n_, p, q)] = quad;
  } else {
    quads_[pair_index(n_, q, p)] = {quad[0], quad[2], quad[1], quad[3]};
  }
}

PairPhaseTable PairPhaseTable::from_phase_matrix(const PhaseMatrix& phases) {
  PairPhaseTable table(phases.size());
  for (std::size_t p = 0; p < phases.size(); ++p) {
    for (std::size_t q = p + 1; q < phases.size(); ++q) {
      table.set(p, q, {0.0, phases.oriented(p, q), 0.0, 0.0});
    }
  }
  return table;
}

PairDistances pairwise_distances(const SystemSetup& setup) {
  require_valid_masses(setup);
  const std::size_t n = setup.size();
  PairDistances out(n);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      BranchQuad quad{};
      for (int jp = 0; jp < 2; ++jp) {
        for (int jq = 0; jq < 2; ++jq) {
          const double d = distance(branch(setup.masses[p], jp), branch(setup.masses[q], jq));
          if (d == 0.0) {
            throw Error(ErrorCode::ZeroDistance,
                        branch_label(p, jp) + " and " + branch_label(q, jq) + " coincide");
          }
          if (d < setup.min_pair_distance) {
            std::ostringstream msg;
            msg << branch_label(p, jp) << " and " << branch_label(q, jq) << " are " << d
                << " m apart, below the " << setup.min_pair_distance << " m threshold";
            throw Error(ErrorCode::ThresholdViolation, msg.str());
          }
          quad[2 * jp + jq] = d;
        }
      }
      out.set(p, q, quad);
    }
  }
  return out;
}

PairPhaseTable phase_table(const SystemSetup& setup, const PhysicalConstants& constants) {
  if (!(constants.G > 0.0) || !(constants.hbar > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "G and hbar must be positive");
  }
  const PairDistances d = pairwise_distances(setup);
  const std::size_t n = setup.size();
  PairPhaseTable table(n);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      // phi = -V / hbar with V = -G m_p m_q / d
      const double coupling =
          constants.G * setup.masses[p].mass_kg * setup.masses[q].mass_kg / constants.hbar;
      const BranchQuad dq = d.at(p, q);
      table.set(p, q, {coupling / dq[0], coupling / dq[1], coupling / dq[2], coupling / dq[3]});
    }
  }
  return table;
}

PhaseMatrix entangling_phases(const PairPhaseTable& table) {
  const std::size_t n = table.size();
  PhaseMatrix phases(n);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      const BranchQuad r = table.at(p, q);
      for (double v : r) {
        if (!std::isfinite(v)) {
          throw Error(ErrorCode::InvalidArgument, "phase table entries must be finite");
        }
      }
      phases.set(p, q, (r[1] + r[2]) - (r[0] + r[3]));
    }
  }
  return phases;
}

SetupDiagnostics validate_setup(const SystemSetup& setup) {
  using Kind = SetupViolation::Kind;
  SetupDiagnostics report;
  report.min_cross_distance = std::numeric_limits<double>::infinity();
  const std::size_t n = setup.size();
  if (n < 2) {
    report.violations.push_back({Kind::TooFewMasses, 0, 0, -1, -1, 0.0,
                                 "N >= 2 required, got " + std::to_string(n)});
  }
  std::vector<bool> usable(n, true);
  for (std::size_t p = 0; p < n; ++p) {
    const MassSpec& m = setup.masses[p];
    const std::string who = "mass " + std::to_string(p + 1);
    if (!(m.mass_kg > 0.0) || !std::isfinite(m.mass_kg)) {
      report.violations.push_back({Kind::NonPositiveMass, p, p, -1, -1, 0.0, who + " must be positive"});
    }
    if (!finite(m.loc0) || !finite(m.loc1)) {
      report.violations.push_back({Kind::NonFinite, p, p, -1, -1, 0.0, who + " has non-finite coordinates"});
      usable[p] = false;
      continue;
    }
    if (distance(m.loc0, m.loc1) == 0.0) {
      report.violations.push_back(
          {Kind::CoincidentBranches, p, p, 0, 1, 0.0, who + ": |0> and |1> coincide"});
    }
  }
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      if (!usable[p] || !usable[q]) continue;
      for (int jp = 0; jp < 2; ++jp) {
        for (int jq = 0; jq < 2; ++jq) {
          const double d = distance(branch(setup.masses[p], jp), branch(setup.masses[q], jq));
          report.min_cross_distance = std::min(report.min_cross_distance, d);
          const std::string pair = branch_label(p, jp) + " and " + branch_label(q, jq);
          if (d == 0.0) {
            report.violations.push_back({Kind::CoincidentPoints, p, q, jp, jq, d, pair + " coincide"});
          } else if (d < setup.min_pair_distance) {
            std::ostringstream msg;
            msg << pair << " are " << d << " m apart, below " << setup.min_pair_distance << " m";
            report.violations.push_back({Kind::BelowThreshold, p, q, jp, jq, d, msg.str()});
          }
        }
      }
    }
  }
  return report;
}

}  // namespace gravent
