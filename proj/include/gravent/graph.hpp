#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gravent/bipartition.hpp"
#include "gravent/phase_matrix.hpp"
#include "gravent/rational.hpp"

/// Structural predicates on the graph of nonzero entangling phases.
namespace gravent::graph {

inline constexpr double kDefaultEdgeEpsilon = 1e-12;

/// Above this node count connectivity() switches from exhaustive vertex-cut
/// search to max-flow.
inline constexpr std::size_t kBruteForceConnectivityLimit = 16;

struct Edge {
  std::size_t p;
  std::size_t q;
  double phase;
};

class EntanglementGraph {
 public:
  EntanglementGraph(std::size_t n, double epsilon_edge);

  std::size_t size() const noexcept { return n_; }
  double epsilon() const noexcept { return epsilon_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  MassMask neighbours(std::size_t p) const { return adj_[p]; }
  bool has_edge(std::size_t p, std::size_t q) const;

  /// Edges with phase <= epsilon are ignored.
  void add_edge(std::size_t p, std::size_t q, double phase);
  void remove_edge(std::size_t p, std::size_t q);

 private:
  std::size_t n_;
  double epsilon_;
  std::vector<MassMask> adj_;
  std::vector<Edge> edges_;
};

EntanglementGraph build_graph(const PhaseMatrix& phases, double epsilon_edge = kDefaultEdgeEpsilon);

/// Nodes reachable from `start` without passing through `removed`.
MassMask component_of(const EntanglementGraph& g, std::size_t start, MassMask removed = 0);

bool is_connected(const EntanglementGraph& g);

/// Vertex connectivity kappa(G); 0 for disconnected graphs, n-1 for K_n.
/// Exhaustive (exponential) below kBruteForceConnectivityLimit nodes.
std::size_t connectivity(const EntanglementGraph& g);
std::size_t connectivity_brute_force(const EntanglementGraph& g);
std::size_t connectivity_max_flow(const EntanglementGraph& g);

struct GenuineVerdict {
  bool genuine = false;
  /// Set iff !genuine: a cut with no crossing edge, so its I-concurrence
  /// vanishes at every t.
  std::optional<Bipartition> witness;
};

GenuineVerdict predicts_genuine_entanglement(const EntanglementGraph& g);

struct GhzSchedule {
  /// Phi with every nonzero Phi_pq an odd multiple of it, as (unit * Phi0).
  Rational unit;
  double phi = 0.0;
  /// GHZ instants are first_time * (2n + 1).
  double first_time = 0.0;
  double period = 0.0;
};

/// Strict mode: all C(N,2) multipliers nonzero with pairwise odd/odd ratios.
/// Relaxed mode only changes N = 3, where one zero phase is allowed; for
/// other N it is identical to strict.
std::optional<GhzSchedule> ghz_condition(const RationalPhases& phases, bool require_all_pairs);

struct SeparabilitySchedule {
  /// First t > 0 with every Phi_pq t in 2 pi Z, as (cycles * 2 pi / Phi0).
  Rational cycles;
  double first_time = 0.0;
  double period = 0.0;
};

/// Throws AllZeroPhases when every multiplier is zero.
SeparabilitySchedule separability_times(const RationalPhases& phases);

enum class Sustainability {
  /// Genuinely entangled for every t > 0.
  Sustained,
  /// Some cut returns to a product state at some t > 0.
  NotSustained,
  Undetermined,
};

const char* to_string(Sustainability s) noexcept;

/// Only decides when the user asserts the nonzero phases are pairwise
/// incommensurate; float data cannot establish that on its own.
Sustainability sustainability(const EntanglementGraph& g, bool marked_incommensurate);

struct BoundReport {
  /// max over the grid of C_{N-1}(t) - C_N(t); <= 1e-12 means the bound held.
  double max_violation = 0.0;
  std::size_t violations = 0;
  /// Grid points with C_N > 0.05 while C_{N-1} < 1e-6.
  std::size_t longer_duration_points = 0;
  std::vector<double> full_curve;
  std::vector<double> reduced_curve;
};

/// Compares the one-vs-rest I-concurrence of mass p1 in the full system
/// against the same cut in the system with `removed` deleted.
BoundReport one_vs_rest_bound_check(const PhaseMatrix& phases, std::size_t p1, std::size_t removed,
                                    std::span<const double> t_grid);

}  // namespace gravent::graph
