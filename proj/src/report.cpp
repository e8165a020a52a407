#include "gravent/report.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "gravent/error.hpp"

namespace gravent::cli {

using nlohmann::json;

namespace {

// JSON has no infinity or NaN.
json number_or_null(double v) {
  return std::isfinite(v) ? json(v) : json(nullptr);
}

}  // namespace

json to_json(const graph::EntanglementGraph& g, bool marked_incommensurate) {
  json edges = json::array();
  for (const graph::Edge& e : g.edges()) {
    edges.push_back({{"p", e.p + 1}, {"q", e.q + 1}, {"phase_rad_per_s", e.phase}});
  }
  const graph::GenuineVerdict verdict = graph::predicts_genuine_entanglement(g);
  return {
      {"nodes", g.size()},
      {"epsilon_edge", g.epsilon()},
      {"edges", edges},
      {"connected", graph::is_connected(g)},
      {"vertex_connectivity", graph::connectivity(g)},
      {"genuine_entanglement", verdict.genuine},
      {"witness_bipartition", verdict.witness ? json(verdict.witness->to_string()) : json(nullptr)},
      {"sustainability", graph::to_string(graph::sustainability(g, marked_incommensurate))},
  };
}

json to_json(const std::optional<graph::GhzSchedule>& ghz) {
  if (!ghz) return {{"reachable", false}};
  return {
      {"reachable", true},
      {"unit_multiplier", ghz->unit.to_string()},
      {"phi_rad_per_s", ghz->phi},
      {"first_time_s", ghz->first_time},
      {"period_s", ghz->period},
  };
}

json to_json(const graph::SeparabilitySchedule& s) {
  return {{"cycles", s.cycles.to_string()}, {"first_time_s", s.first_time}, {"period_s", s.period}};
}

json to_json(const SetupDiagnostics& d) {
  json violations = json::array();
  for (const SetupViolation& v : d.violations) violations.push_back(v.message);
  return {{"ok", d.ok()},
          {"min_cross_distance_m", number_or_null(d.min_cross_distance)},
          {"violations", violations}};
}

json to_json(const ComparisonReport& c) {
  json measures = json::array();
  for (const MeasureComparison& m : c.measures) {
    measures.push_back({
        {"measure", to_string(m.measure)},
        {"max_abs_diff", number_or_null(m.max_abs_diff)},
        {"worst_target", m.worst_target},
        {"worst_t_seconds", m.worst_t},
        {"certified", m.certified},
        {"pass", m.pass},
    });
  }
  json out = {{"tolerance", c.tolerance}, {"pass", c.pass}, {"measures", measures}};
  if (!c.pass) out["failure"] = c.failure_summary();
  return out;
}

json to_json(const ThreeTangleCheck& c) {
  return {
      {"t_seconds", c.t},
      {"indexing", closedform::to_string(c.indexing)},
      {"published", c.published},
      {"oracle_residual", c.residual},
      {"abs_difference", c.abs_difference},
      {"agrees", c.valid},
  };
}

std::vector<ThreeTangleCheck> three_tangle_validation(std::size_t random_draws, std::uint64_t seed) {
  std::vector<ThreeTangleCase> cases;
  cases.push_back({"product", PhaseMatrix(3), 1.0});
  const double phi = 1.0;
  cases.push_back({"ghz", PhaseMatrix::from_rows({{0, phi, phi}, {phi, 0, phi}, {phi, phi, 0}}),
                   std::numbers::pi / phi});
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> phase(0.0, 5.0);
  std::uniform_real_distribution<double> time(0.0, 10.0);
  for (std::size_t i = 0; i < random_draws; ++i) {
    PhaseMatrix m(3);
    m.set(0, 1, phase(rng));
    m.set(0, 2, phase(rng));
    m.set(1, 2, phase(rng));
    cases.push_back({"random-" + std::to_string(i + 1), std::move(m), time(rng)});
  }
  return check_three_tangle_cases(cases);
}

json three_tangle_report(const std::vector<ThreeTangleCheck>& checks) {
  json rows = json::array();
  double worst = 0.0;
  for (const ThreeTangleCheck& c : checks) {
    rows.push_back(to_json(c));
    worst = std::max(worst, c.abs_difference);
  }
  return {
      {"authoritative", "oracle_residual"},
      {"published_formula_certified", false},
      {"max_abs_difference", worst},
      {"checks", rows},
  };
}

json build_report(const Problem& problem, const std::optional<ComparisonReport>& comparison) {
  const RunConfig& run = problem.run;
  json report;
  report["mode"] = to_string(run.mode);
  report["n_masses"] = problem.size();

  json matrix = json::array();
  for (std::size_t p = 0; p < problem.size(); ++p) {
    json row = json::array();
    for (std::size_t q = 0; q < problem.size(); ++q) row.push_back(problem.phases(p, q));
    matrix.push_back(row);
  }
  report["entangling_phases_rad_per_s"] = matrix;

  report["graph"] = to_json(graph::build_graph(problem.phases, run.epsilon_edge), run.incommensurate);

  if (problem.setup) report["setup"] = to_json(validate_setup(*problem.setup));

  if (problem.rational) {
    json r;
    r["ghz_strict"] = to_json(graph::ghz_condition(*problem.rational, true));
    r["ghz_relaxed"] = to_json(graph::ghz_condition(*problem.rational, false));
    try {
      r["separability"] = to_json(graph::separability_times(*problem.rational));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::AllZeroPhases) throw;
      r["separability"] = {{"note", "all phases zero: product state at every t"}};
    }
    report["rational"] = r;
  }

  if (problem.size() == 3 && problem.size() <= run.max_qubits) {
    std::vector<ThreeTangleCase> cases;
    const std::vector<double> grid = time_grid(run);
    for (double t : {grid.front(), grid[grid.size() / 2], grid.back()}) cases.push_back({"grid", problem.phases, t});
    report["three_tangle_check"] = three_tangle_report(check_three_tangle_cases(cases));
  }

  if (comparison) report["engine_comparison"] = to_json(*comparison);
  return report;
}

}  // namespace gravent::cli
