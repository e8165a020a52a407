#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "gravent/config.hpp"

namespace gravent::cli {

struct Row {
  double t = 0.0;
  Measure measure = Measure::IConcurrence;
  std::string target;
  Engine engine = Engine::Closed;  // Closed or Oracle, never Both
  double value = 0.0;
};

/// Closed-form I-concurrence used by the sweep. Swappable so tests can feed
/// a deliberately broken engine through the comparison path.
using IConcurrenceFn = std::function<double(const PhaseMatrix&, const Bipartition&, double)>;

/// Rows ordered by t, then measure (config order), then target, then engine
/// (closed before oracle).
std::vector<Row> run_sweep(const Problem& problem, const IConcurrenceFn& closed_iconcurrence = {});

/// Targets of a measure for this problem, in emission order.
std::vector<std::string> targets_for(const Problem& problem, Measure measure);

inline constexpr const char* kCsvHeader = "t_seconds,measure,target,engine,value";

void write_csv(std::ostream& out, const std::vector<Row>& rows);

struct MeasureComparison {
  Measure measure = Measure::IConcurrence;
  double max_abs_diff = 0.0;
  std::string worst_target;
  double worst_t = 0.0;
  /// False for tangle3, whose closed engine is the unvalidated published
  /// expression; such measures are reported but do not affect `pass`.
  bool certified = true;
  bool pass = true;
};

struct ComparisonReport {
  double tolerance = 1e-9;
  std::vector<MeasureComparison> measures;
  bool pass = true;

  /// "iconcurrence 13|2456 max |diff| 3.1e-02 at t = 0.5" for the first
  /// failing certified measure; empty when passing.
  std::string failure_summary() const;
};

/// Pairs closed and oracle rows of an engine=both sweep.
ComparisonReport summarize(const std::vector<Row>& rows, double tolerance);

/// Runs both engines over the problem's grid and compares them. Throws
/// TooManyQubits when N exceeds the oracle cap.
ComparisonReport compare_engines(const Problem& problem, const IConcurrenceFn& closed_iconcurrence = {});

}  // namespace gravent::cli
