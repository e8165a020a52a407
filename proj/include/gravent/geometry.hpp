#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "gravent/phase_matrix.hpp"

namespace gravent {

using Vec3 = std::array<double, 3>;

double distance(const Vec3& a, const Vec3& b) noexcept;

/// A mass in a two-branch spatial superposition. loc0/loc1 are the centres of
/// the |0> and |1> wavepackets (meters).
struct MassSpec {
  double mass_kg = 0.0;
  Vec3 loc0{};
  Vec3 loc1{};
};

inline constexpr double kDefaultMinPairDistance = 1e-4;

struct SystemSetup {
  std::vector<MassSpec> masses;
  double min_pair_distance = kDefaultMinPairDistance;

  std::size_t size() const noexcept { return masses.size(); }
};

struct PhysicalConstants {
  double G = 6.674e-11;
  double hbar = 1.054571817e-34;
};

/// Index of the unordered pair p<q in the row-major upper triangle.
std::size_t pair_index(std::size_t n, std::size_t p, std::size_t q);
std::size_t pair_count(std::size_t n) noexcept;

/// Four per-branch quantities of one mass pair, indexed by 2*j_p + j_q.
/// Used both for distances and for phase rates.
using BranchQuad = std::array<double, 4>;

/// Per-pair branch quantities for all p<q. Lookup with p>q returns the quad
/// with branch indices swapped, so callers never care about pair order.
class PairQuadTable {
 public:
  PairQuadTable() = default;
  explicit PairQuadTable(std::size_t n) : n_(n), quads_(pair_count(n), BranchQuad{}) {}

  std::size_t size() const noexcept { return n_; }
  BranchQuad at(std::size_t p, std::size_t q) const;
  double at(std::size_t p, std::size_t q, int jp, int jq) const;
  void set(std::size_t p, std::size_t q, const BranchQuad& quad);

  bool operator==(const PairQuadTable&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<BranchQuad> quads_;
};

/// Distances d_{j_p j_q} between branch centres (meters).
using PairDistances = PairQuadTable;

/// Phase rates phi_{j_p j_q} (rad/s) picked up by each branch pair.
class PairPhaseTable : public PairQuadTable {
 public:
  using PairQuadTable::PairQuadTable;

  /// A table whose entangling phases reproduce `phases` exactly, sign
  /// included: phi_01 carries the oriented phase, the other three rates are 0.
  static PairPhaseTable from_phase_matrix(const PhaseMatrix& phases);
};

PairDistances pairwise_distances(const SystemSetup& setup);
PairPhaseTable phase_table(const SystemSetup& setup, const PhysicalConstants& constants = {});
PhaseMatrix entangling_phases(const PairPhaseTable& table);

struct SetupViolation {
  enum class Kind {
    TooFewMasses,
    NonPositiveMass,
    NonFinite,
    CoincidentBranches,
    CoincidentPoints,
    BelowThreshold,
  };
  Kind kind;
  std::size_t p = 0;  // 0-based mass indices; q == p for single-mass issues
  std::size_t q = 0;
  int jp = -1;
  int jq = -1;
  double distance = 0.0;
  std::string message;
};

struct SetupDiagnostics {
  std::vector<SetupViolation> violations;
  /// Smallest cross-pair branch distance; infinity when N < 2.
  double min_cross_distance = 0.0;

  bool ok() const noexcept { return violations.empty(); }
};

SetupDiagnostics validate_setup(const SystemSetup& setup);

}  // namespace gravent
