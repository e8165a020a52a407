#include "gravent/graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <queue>

#include "gravent/closedform.hpp"
#include "gravent/error.hpp"

namespace gravent::graph {

EntanglementGraph::EntanglementGraph(std::size_t n, double epsilon_edge)
    : n_(n), epsilon_(epsilon_edge), adj_(n, 0) {
  if (n > kMaxMasses) throw Error(ErrorCode::InvalidArgument, "graph supports at most 63 nodes");
  if (!(epsilon_edge >= 0.0)) throw Error(ErrorCode::InvalidArgument, "epsilon_edge must be >= 0");
}

bool EntanglementGraph::has_edge(std::size_t p, std::size_t q) const {
  if (p >= n_ || q >= n_) throw Error(ErrorCode::IndexError, "node index out of range");
  return adj_[p] >> q & 1U;
}

void EntanglementGraph::add_edge(std::size_t p, std::size_t q, double phase) {
  if (p >= n_ || q >= n_) throw Error(ErrorCode::IndexError, "node index out of range");
  if (p == q) throw Error(ErrorCode::InvalidArgument, "self-loops are not allowed");
  if (!(std::abs(phase) > epsilon_) || has_edge(p, q)) return;
  adj_[p] |= MassMask{1} << q;
  adj_[q] |= MassMask{1} << p;
  edges_.push_back({std::min(p, q), std::max(p, q), std::abs(phase)});
}

void EntanglementGraph::remove_edge(std::size_t p, std::size_t q) {
  if (!has_edge(p, q)) return;
  adj_[p] &= ~(MassMask{1} << q);
  adj_[q] &= ~(MassMask{1} << p);
  const std::size_t lo = std::min(p, q);
  const std::size_t hi = std::max(p, q);
  std::erase_if(edges_, [&](const Edge& e) { return e.p == lo && e.q == hi; });
}

EntanglementGraph build_graph(const PhaseMatrix& phases, double epsilon_edge) {
  EntanglementGraph g(phases.size(), epsilon_edge);
  for (std::size_t p = 0; p < phases.size(); ++p) {
    for (std::size_t q = p + 1; q < phases.size(); ++q) {
      g.add_edge(p, q, phases(p, q));
    }
  }
  return g;
}

MassMask component_of(const EntanglementGraph& g, std::size_t start, MassMask removed) {
  if (start >= g.size()) throw Error(ErrorCode::IndexError, "start node out of range");
  MassMask seen = MassMask{1} << start;
  MassMask frontier = seen;
  while (frontier) {
    MassMask next = 0;
    for (MassMask f = frontier; f; f &= f - 1) {
      next |= g.neighbours(static_cast<std::size_t>(std::countr_zero(f)));
    }
    next &= ~seen & ~removed;
    seen |= next;
    frontier = next;
  }
  return seen;
}

bool is_connected(const EntanglementGraph& g) {
  if (g.size() == 0) return false;
  return component_of(g, 0) == full_mask(g.size());
}

std::size_t connectivity_brute_force(const EntanglementGraph& g) {
  const std::size_t n = g.size();
  if (n <= 1 || !is_connected(g)) return 0;
  const MassMask all = full_mask(n);
  for (std::size_t k = 1; k + 2 <= n; ++k) {
    for (MassMask cut : k_subsets(n, k)) {
      const MassMask rest = all & ~cut;
      const auto start = static_cast<std::size_t>(std::countr_zero(rest));
      if (component_of(g, start, cut) != rest) return k;
    }
  }
  return n - 1;
}

namespace {

/// Maximum number of internally vertex-disjoint s-t paths, via unit-capacity
/// max-flow on the split graph (node v -> v_in = 2v, v_out = 2v + 1).
std::size_t local_connectivity(const EntanglementGraph& g, std::size_t s, std::size_t t) {
  const std::size_t n = g.size();
  const std::size_t m = 2 * n;
  const int inf = static_cast<int>(n);
  std::vector<std::vector<int>> cap(m, std::vector<int>(m, 0));
  for (std::size_t v = 0; v < n; ++v) {
    cap[2 * v][2 * v + 1] = (v == s || v == t) ? inf : 1;
  }
  for (const Edge& e : g.edges()) {
    cap[2 * e.p + 1][2 * e.q] = inf;
    cap[2 * e.q + 1][2 * e.p] = inf;
  }
  const std::size_t source = 2 * s + 1;
  const std::size_t sink = 2 * t;
  std::size_t flow = 0;
  while (true) {
    std::vector<std::size_t> parent(m, m);
    parent[source] = source;
    std::queue<std::size_t> bfs;
    bfs.push(source);
    while (!bfs.empty() && parent[sink] == m) {
      const std::size_t u = bfs.front();
      bfs.pop();
      for (std::size_t v = 0; v < m; ++v) {
        if (parent[v] == m && cap[u][v] > 0) {
          parent[v] = u;
          bfs.push(v);
        }
      }
    }
    if (parent[sink] == m) break;
    for (std::size_t v = sink; v != source; v = parent[v]) {
      --cap[parent[v]][v];
      ++cap[v][parent[v]];
    }
    ++flow;
  }
  return flow;
}

}  // namespace

std::size_t connectivity_max_flow(const EntanglementGraph& g) {
  const std::size_t n = g.size();
  if (n <= 1 || !is_connected(g)) return 0;
  std::size_t best = n - 1;
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = s + 1; t < n; ++t) {
      if (!g.has_edge(s, t)) best = std::min(best, local_connectivity(g, s, t));
    }
  }
  return best;
}

std::size_t connectivity(const EntanglementGraph& g) {
  return g.size() <= kBruteForceConnectivityLimit ? connectivity_brute_force(g)
                                                  : connectivity_max_flow(g);
}

GenuineVerdict predicts_genuine_entanglement(const EntanglementGraph& g) {
  if (g.size() < 2) throw Error(ErrorCode::InvalidArgument, "genuine entanglement needs N >= 2");
  if (is_connected(g)) return {true, std::nullopt};
  return {false, Bipartition(g.size(), component_of(g, 0))};
}

namespace {

struct CommonMeasure {
  std::vector<std::int64_t> scaled;  // |r_i| * L / G, integers with gcd 1
  std::int64_t lcm_den = 1;          // L
  std::int64_t gcd_num = 0;          // G
};

CommonMeasure common_measure(const std::vector<Rational>& values) {
  CommonMeasure cm;
  for (const Rational& r : values) {
    const std::int64_t g = std::gcd(cm.lcm_den, r.den());
    std::int64_t l = 0;
    if (__builtin_mul_overflow(cm.lcm_den / g, r.den(), &l)) {
      throw Error(ErrorCode::InvalidArgument, "denominators too large");
    }
    cm.lcm_den = l;
  }
  std::vector<std::int64_t> m;
  for (const Rational& r : values) {
    std::int64_t v = 0;
    if (__builtin_mul_overflow(r.abs().num(), cm.lcm_den / r.den(), &v)) {
      throw Error(ErrorCode::InvalidArgument, "multipliers too large");
    }
    m.push_back(v);
    cm.gcd_num = std::gcd(cm.gcd_num, v);
  }
  for (std::int64_t v : m) cm.scaled.push_back(v / cm.gcd_num);
  return cm;
}

std::vector<Rational> nonzero_multipliers(const RationalPhases& phases, std::size_t& zeros) {
  std::vector<Rational> out;
  zeros = 0;
  for (std::size_t p = 0; p < phases.size(); ++p) {
    for (std::size_t q = p + 1; q < phases.size(); ++q) {
      const Rational& r = phases.multiplier(p, q);
      if (r.is_zero()) {
        ++zeros;
      } else {
        out.push_back(r);
      }
    }
  }
  return out;
}

}  // namespace

std::optional<GhzSchedule> ghz_condition(const RationalPhases& phases, bool require_all_pairs) {
  if (phases.size() < 2) throw Error(ErrorCode::InvalidArgument, "GHZ condition needs N >= 2");
  std::size_t zeros = 0;
  const std::vector<Rational> nonzero = nonzero_multipliers(phases, zeros);
  const std::size_t allowed_zeros = (!require_all_pairs && phases.size() == 3) ? 1 : 0;
  if (nonzero.empty() || zeros > allowed_zeros) return std::nullopt;

  const CommonMeasure cm = common_measure(nonzero);
  const bool all_odd = std::all_of(cm.scaled.begin(), cm.scaled.end(),
                                   [](std::int64_t v) { return v % 2 != 0; });
  if (!all_odd) return std::nullopt;

  GhzSchedule out;
  out.unit = Rational(cm.gcd_num, cm.lcm_den);
  out.phi = out.unit.to_double() * phases.base();
  out.first_time = std::numbers::pi / out.phi;
  out.period = 2.0 * std::numbers::pi / out.phi;
  return out;
}

SeparabilitySchedule separability_times(const RationalPhases& phases) {
  std::size_t zeros = 0;
  const std::vector<Rational> nonzero = nonzero_multipliers(phases, zeros);
  if (nonzero.empty()) {
    throw Error(ErrorCode::AllZeroPhases, "no nonzero entangling phase: the state never entangles");
  }
  const CommonMeasure cm = common_measure(nonzero);
  SeparabilitySchedule out;
  out.cycles = Rational(cm.lcm_den, cm.gcd_num);
  out.first_time = 2.0 * std::numbers::pi * out.cycles.to_double() / phases.base();
  out.period = out.first_time;
  return out;
}

const char* to_string(Sustainability s) noexcept {
  switch (s) {
    case Sustainability::Sustained: return "sustained";
    case Sustainability::NotSustained: return "not-sustained";
    case Sustainability::Undetermined: return "undetermined";
  }
  return "unknown";
}

Sustainability sustainability(const EntanglementGraph& g, bool marked_incommensurate) {
  if (!is_connected(g)) return Sustainability::NotSustained;
  if (!marked_incommensurate) return Sustainability::Undetermined;
  // a cut vanishes at some t > 0 iff every crossing phase hits 2 pi Z at
  // once, which incommensurate phases only allow for a single crossing edge
  for (const Edge& e : g.edges()) {
    EntanglementGraph without = g;
    without.remove_edge(e.p, e.q);
    if (!is_connected(without)) return Sustainability::NotSustained;
  }
  return Sustainability::Sustained;
}

BoundReport one_vs_rest_bound_check(const PhaseMatrix& phases, std::size_t p1, std::size_t removed,
                                    std::span<const double> t_grid) {
  const std::size_t n = phases.size();
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "bound check needs N >= 3");
  if (p1 >= n || removed >= n || p1 == removed) {
    throw Error(ErrorCode::IndexError, "need distinct p1 and removed below N");
  }
  const PhaseMatrix reduced = phases.without(removed);
  const Bipartition full_cut(n, MassMask{1} << p1);
  const Bipartition reduced_cut(n - 1, MassMask{1} << (p1 > removed ? p1 - 1 : p1));

  BoundReport report;
  report.max_violation = t_grid.empty() ? 0.0 : -std::numeric_limits<double>::infinity();
  for (double t : t_grid) {
    const double full = closedform::iconcurrence(phases, full_cut, t);
    const double part = closedform::iconcurrence(reduced, reduced_cut, t);
    report.full_curve.push_back(full);
    report.reduced_curve.push_back(part);
    const double violation = part - full;
    report.max_violation = std::max(report.max_violation, violation);
    if (violation > 1e-12) ++report.violations;
    if (full > 0.05 && part < 1e-6) ++report.longer_duration_points;
  }
  return report;
}

}  // namespace gravent::graph
