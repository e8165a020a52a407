#include "gravent/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <ostream>

#include "gravent/closedform.hpp"
#include "gravent/error.hpp"
#include "gravent/oracle.hpp"

namespace gravent::cli {

namespace {

std::string pair_label(std::size_t p, std::size_t q) {
  return std::to_string(p + 1) + "-" + std::to_string(q + 1);
}

struct Target {
  std::string label;
  const Bipartition* cut = nullptr;
  std::size_t a = 0;
  std::size_t b = 0;
};

std::vector<Target> targets(const Problem& problem, Measure measure) {
  std::vector<Target> out;
  const std::size_t n = problem.size();
  switch (measure) {
    case Measure::IConcurrence:
      for (const Bipartition& cut : problem.cuts) out.push_back({cut.to_string(), &cut});
      break;
    case Measure::Qk:
      for (std::size_t k = 1; k <= n / 2; ++k) out.push_back({"k=" + std::to_string(k), nullptr, k});
      break;
    case Measure::Tangle3:
      out.push_back({"123"});
      break;
    case Measure::Pairwise:
      for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) out.push_back({pair_label(p, q), nullptr, p, q});
      }
      break;
    case Measure::TwoBody:
      out.push_back({pair_label(0, 1), nullptr, 0, 1});
      break;
  }
  return out;
}

double closed_value(const Problem& problem, Measure measure, const Target& target, double t,
                    const IConcurrenceFn& iconc, const std::optional<oracle::StateVector>& state) {
  const PhaseMatrix& phases = problem.phases;
  switch (measure) {
    case Measure::IConcurrence:
      return iconc ? iconc(phases, *target.cut, t) : closedform::iconcurrence(phases, *target.cut, t);
    case Measure::Qk:
      return closedform::meyer_wallach_qk(phases, target.a, t);
    case Measure::Tangle3:
      return closedform::three_tangle_published(phases, t, closedform::TangleIndexing::UnorderedThree);
    case Measure::Pairwise: {
      // The closed pairwise formula needs a 3-tangle; the residual is the
      // only validated source.
      const double tau = oracle::three_tangle_residual(state ? *state : oracle::evolve(phases, t), 0);
      return closedform::pairwise_concurrence(phases, target.a, target.b, t, tau);
    }
    case Measure::TwoBody:
      return closedform::concurrence_two_body(phases(0, 1), t);
  }
  return 0.0;
}

double oracle_value(Measure measure, const Target& target, const oracle::StateVector& state) {
  switch (measure) {
    case Measure::IConcurrence: return oracle::iconcurrence_oracle(state, *target.cut);
    case Measure::Qk: return oracle::qk_from_purities(state, target.a);
    case Measure::Tangle3: return oracle::three_tangle_residual(state, 0);
    case Measure::Pairwise:
    case Measure::TwoBody: return oracle::pair_concurrence(state, target.a, target.b);
  }
  return 0.0;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::vector<std::string> targets_for(const Problem& problem, Measure measure) {
  std::vector<std::string> out;
  for (const Target& t : targets(problem, measure)) out.push_back(t.label);
  return out;
}

std::vector<Row> run_sweep(const Problem& problem, const IConcurrenceFn& closed_iconcurrence) {
  const RunConfig& run = problem.run;
  const bool want_closed = run.engine != Engine::Oracle;
  const bool want_oracle = run.engine != Engine::Closed;
  const bool closed_needs_state =
      std::find(run.measures.begin(), run.measures.end(), Measure::Pairwise) != run.measures.end();

  std::vector<std::pair<Measure, std::vector<Target>>> plan;
  for (Measure m : run.measures) plan.emplace_back(m, targets(problem, m));

  std::vector<Row> rows;
  for (double t : time_grid(run)) {
    std::optional<oracle::StateVector> state;
    if (want_oracle || closed_needs_state) state = oracle::evolve(problem.phases, t, run.max_qubits);
    for (const auto& [measure, tgts] : plan) {
      for (const Target& target : tgts) {
        auto emit = [&](Engine engine, auto&& compute) {
          try {
            rows.push_back({t, measure, target.label, engine, compute()});
          } catch (const Error& e) {
            throw Error(e.code(), std::string("row t=") + format_double(t) + " measure=" + to_string(measure) +
                                      " target=" + target.label + " engine=" + to_string(engine) + ": " +
                                      e.what());
          }
        };
        if (want_closed) {
          emit(Engine::Closed, [&] { return closed_value(problem, measure, target, t, closed_iconcurrence, state); });
        }
        if (want_oracle) {
          emit(Engine::Oracle, [&] { return oracle_value(measure, target, *state); });
        }
      }
    }
  }
  return rows;
}

void write_csv(std::ostream& out, const std::vector<Row>& rows) {
  out << kCsvHeader << '\n';
  for (const Row& r : rows) {
    out << format_double(r.t) << ',' << to_string(r.measure) << ',' << r.target << ',' << to_string(r.engine)
        << ',' << format_double(r.value) << '\n';
  }
}

std::string ComparisonReport::failure_summary() const {
  for (const MeasureComparison& m : measures) {
    if (!m.pass) {
      char buf[64];
      std::snprintf(buf, sizeof buf, " max |diff| %.3e at t = %.17g", m.max_abs_diff, m.worst_t);
      return std::string(to_string(m.measure)) + " " + m.worst_target + buf;
    }
  }
  return {};
}

ComparisonReport summarize(const std::vector<Row>& rows, double tolerance) {
  ComparisonReport report;
  report.tolerance = tolerance;
  std::map<Measure, std::size_t> index;
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    const Row& c = rows[i];
    const Row& o = rows[i + 1];
    if (c.engine != Engine::Closed || o.engine != Engine::Oracle || c.measure != o.measure ||
        c.target != o.target || c.t != o.t) {
      continue;
    }
    auto [it, fresh] = index.try_emplace(c.measure, report.measures.size());
    if (fresh) {
      MeasureComparison mc;
      mc.measure = c.measure;
      mc.certified = c.measure != Measure::Tangle3;
      mc.worst_target = c.target;
      mc.worst_t = c.t;
      report.measures.push_back(mc);
    }
    MeasureComparison& mc = report.measures[it->second];
    const double diff = std::abs(c.value - o.value);
    if (diff > mc.max_abs_diff || std::isnan(diff)) {
      mc.max_abs_diff = std::isnan(diff) ? INFINITY : diff;
      mc.worst_target = c.target;
      mc.worst_t = c.t;
    }
    ++i;
  }
  for (MeasureComparison& mc : report.measures) {
    mc.pass = !mc.certified || mc.max_abs_diff < tolerance;
    report.pass = report.pass && mc.pass;
  }
  return report;
}

ComparisonReport compare_engines(const Problem& problem, const IConcurrenceFn& closed_iconcurrence) {
  if (problem.size() > problem.run.max_qubits) {
    throw Error(ErrorCode::TooManyQubits, "N = " + std::to_string(problem.size()) + " exceeds the oracle cap of " +
                                              std::to_string(problem.run.max_qubits));
  }
  Problem both = problem;
  both.run.engine = Engine::Both;
  return summarize(run_sweep(both, closed_iconcurrence), problem.run.tolerance);
}

}  // namespace gravent::cli
