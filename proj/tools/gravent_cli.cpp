// Batch sweeps of gravitationally induced entanglement.
//
//   gravent_cli --config run.json [--engine both] [--out sweep.csv] [--report report.json]
//   gravent_cli --config run.json --compare
//
// Exit status: 0 ok, 1 invalid input, 2 computation error, 3 engines disagree.

#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"

#include "gravent/config.hpp"
#include "gravent/error.hpp"
#include "gravent/report.hpp"
#include "gravent/sweep.hpp"

namespace {

enum Exit { kOk = 0, kInvalid = 1, kCompute = 2, kMismatch = 3 };

struct Overrides {
  std::string config;
  std::optional<std::string> engine;
  std::optional<std::string> measures;
  std::optional<std::string> bipartitions;
  std::optional<double> t_start;
  std::optional<double> t_end;
  std::optional<std::size_t> steps;
  std::optional<std::string> out;
  std::string report;
  bool compare = false;
};

void apply(const Overrides& o, gravent::cli::Problem& problem) {
  using namespace gravent::cli;
  RunConfig& run = problem.run;
  if (o.engine) run.engine = parse_engine(*o.engine);
  if (o.measures) run.measures = parse_measures(*o.measures);
  if (o.bipartitions) run.bipartitions = BipartitionSelector::parse(*o.bipartitions);
  if (o.t_start) run.t_start = *o.t_start;
  if (o.t_end) run.t_end = *o.t_end;
  if (o.steps) run.steps = *o.steps;
  if (o.out) run.output = *o.out;
  try {
    finalize(problem);
  } catch (const gravent::Error& e) {
    throw gravent::Error(gravent::ErrorCode::ValidationError, e.what());
  }
}

void emit_report(const nlohmann::json& report, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << report.dump(2) << '\n';
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << report.dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement sweeps for masses in spatial superposition"};
  Overrides o;
  app.add_option("--config", o.config, "JSON run configuration")->required()->check(CLI::ExistingFile);
  app.add_option("--engine", o.engine, "closed | oracle | both");
  app.add_option("--measures", o.measures, "comma separated: iconcurrence,q_k,tangle3,pairwise,two_body");
  app.add_option("--bipartitions", o.bipartitions, "all | one-vs-rest | cuts such as \"125|346;13|2456\"");
  app.add_option("--t-start", o.t_start, "first time (s)");
  app.add_option("--t-end", o.t_end, "last time (s)");
  app.add_option("--steps", o.steps, "number of time points");
  app.add_option("--out", o.out, "CSV path (default stdout)");
  app.add_option("--report", o.report, "JSON report path; '-' for stdout");
  app.add_flag("--compare", o.compare, "run both engines and exit 3 when they disagree");
  CLI11_PARSE(app, argc, argv);

  using namespace gravent::cli;
  Problem problem;
  try {
    problem = load_config(o.config);
    apply(o, problem);
  } catch (const gravent::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  }

  try {
    std::optional<ComparisonReport> comparison;
    if (o.compare) {
      comparison = compare_engines(problem);
    } else {
      const std::vector<Row> rows = run_sweep(problem);
      if (problem.run.output.empty() || problem.run.output == "-") {
        write_csv(std::cout, rows);
      } else {
        std::ofstream f(problem.run.output);
        if (!f) throw std::runtime_error("cannot write " + problem.run.output);
        write_csv(f, rows);
      }
      if (problem.run.engine == Engine::Both) comparison = summarize(rows, problem.run.tolerance);
    }

    const nlohmann::json report = build_report(problem, comparison);
    // Without --report the JSON goes to stdout only when it is not already
    // carrying the CSV.
    const bool csv_on_stdout = !o.compare && (problem.run.output.empty() || problem.run.output == "-");
    if (!o.report.empty() || !csv_on_stdout) emit_report(report, o.report);

    if (comparison && !comparison->pass) {
      std::cerr << "engines disagree: " << comparison->failure_summary() << '\n';
      return kMismatch;
    }
    if (comparison) {
      for (const MeasureComparison& m : comparison->measures) {
        std::cerr << to_string(m.measure) << " max |closed - oracle| = " << m.max_abs_diff
                  << (m.certified ? "" : " (closed form not certified)") << '\n';
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCompute;
  }
  return kOk;
}
