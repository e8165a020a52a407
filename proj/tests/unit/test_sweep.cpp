#include "doctest.h"

#include <cmath>
#include <set>
#include <sstream>

#include "gravent/closedform.hpp"
#include "gravent/config.hpp"
#include "gravent/error.hpp"
#include "gravent/report.hpp"
#include "gravent/sweep.hpp"

using namespace gravent;
using namespace gravent::cli;

namespace {

Problem two_body(Engine engine) {
  Problem p = parse_config_text(R"({"mode": "phases",
    "phase_matrix_rad_per_s": [[0, 3.141592653589793], [3.141592653589793, 0]],
    "run": {"measures": ["two_body"], "t_start": 0, "t_end": 2, "steps": 5}})");
  p.run.engine = engine;
  return p;
}

Problem random_n(std::size_t n, const std::string& extra_run = "") {
  return parse_config_text(R"({"mode": "phases", "random_phases": {"n": )" + std::to_string(n) +
                           R"(, "seed": 99}, "run": {"t_start": 0, "t_end": 10, "steps": 7)" + extra_run + "}}");
}

}  // namespace

TEST_SUITE("sweep") {

TEST_CASE("two-body concurrence peaks at t = 1") {
  const auto rows = run_sweep(two_body(Engine::Closed));
  REQUIRE(rows.size() == 5);
  CHECK(rows[2].t == 1.0);
  CHECK(rows[2].target == "1-2");
  CHECK(rows[2].value == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(rows[0].value == 0.0);
}

TEST_CASE("row count and ordering") {
  Problem p = random_n(4, R"(, "engine": "both", "measures": ["q_k", "iconcurrence"])");
  const auto rows = run_sweep(p);
  // 7 steps x (2 k values + 7 cuts) x 2 engines
  CHECK(rows.size() == 7 * (2 + 7) * 2);
  CHECK(rows[0].measure == Measure::Qk);
  CHECK(rows[0].target == "k=1");
  CHECK(rows[0].engine == Engine::Closed);
  CHECK(rows[1].engine == Engine::Oracle);
  CHECK(rows[4].measure == Measure::IConcurrence);
  CHECK(rows[4].target == "123|4");
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i - 1].t <= rows[i].t);
  CHECK(targets_for(p, Measure::Qk) == std::vector<std::string>{"k=1", "k=2"});
}

TEST_CASE("three-mass measures") {
  Problem p = random_n(3, R"(, "engine": "both", "measures": ["tangle3", "pairwise"])");
  const auto rows = run_sweep(p);
  CHECK(rows.size() == 7 * (1 + 3) * 2);
  const ComparisonReport r = summarize(rows, 1e-9);
  REQUIRE(r.measures.size() == 2);
  CHECK_FALSE(r.measures[0].certified);
  CHECK(r.measures[1].pass);
  CHECK(r.pass);
}

TEST_CASE("CSV format") {
  std::ostringstream out;
  write_csv(out, run_sweep(two_body(Engine::Closed)));
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "t_seconds,measure,target,engine,value");
  std::getline(in, line);
  CHECK(line == "0,two_body,1-2,closed,0");
  std::getline(in, line);
  CHECK(line == "0.5,two_body,1-2,closed,0.70710678118654746");
}

TEST_CASE("identical configs give identical CSV") {
  auto csv = [] {
    std::ostringstream out;
    write_csv(out, run_sweep(random_n(5, R"(, "engine": "both", "measures": ["iconcurrence", "q_k"])")));
    return out.str();
  };
  CHECK(csv() == csv());
}

TEST_CASE("engine comparison") {
  const ComparisonReport n2 = compare_engines(two_body(Engine::Closed));
  REQUIRE(n2.measures.size() == 1);
  CHECK(n2.measures[0].max_abs_diff < 1e-15);
  const ComparisonReport n4 = compare_engines(random_n(4, R"(, "measures": ["iconcurrence", "q_k"])"));
  CHECK(n4.pass);
  CHECK(n4.measures[0].max_abs_diff < 1e-9);
  CHECK(n4.failure_summary().empty());
}

TEST_CASE("corrupted series is caught and the cut named") {
  const Problem p = random_n(4);
  const Bipartition bad = Bipartition::parse("13|24", 4);
  auto broken = [&](const PhaseMatrix& m, const Bipartition& cut, double t) {
    double lambda = closedform::lambda_series(m, cut, t);
    if (cut == bad && t > 0) lambda *= 0.99;
    return closedform::iconcurrence_from_lambda(cut.k(), lambda);
  };
  const ComparisonReport r = compare_engines(p, broken);
  CHECK_FALSE(r.pass);
  REQUIRE(r.measures.size() == 1);
  CHECK(r.measures[0].worst_target == "13|24");
  CHECK(r.failure_summary().find("13|24") != std::string::npos);
}

TEST_CASE("engine errors carry row context") {
  const Problem p = random_n(4);
  auto failing = [](const PhaseMatrix&, const Bipartition&, double) -> double {
    throw Error(ErrorCode::NegativeRadicand, "boom");
  };
  try {
    run_sweep(p, failing);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NegativeRadicand);
    CHECK(std::string(e.what()).find("target=123|4") != std::string::npos);
  }
}

TEST_CASE("oracle cap") {
  Problem p = random_n(4);
  p.run.max_qubits = 3;
  CHECK_THROWS_AS(compare_engines(p), Error);
}

TEST_CASE("report contents") {
  Problem p = parse_config_text(R"({"mode": "rational-phases",
    "rational": {"base_rad_per_s": 0.5, "multipliers": [["0", "3", "1"], ["3", "0", "0"], ["1", "0", "0"]]},
    "run": {"t_end": 6.283185307179586, "steps": 3}})");
  const auto report = build_report(p, compare_engines(p));
  CHECK(report["graph"]["connected"] == true);
  CHECK(report["graph"]["vertex_connectivity"] == 1);
  CHECK(report["graph"]["sustainability"] == "undetermined");
  CHECK(report["rational"]["ghz_strict"]["reachable"] == false);
  CHECK(report["rational"]["ghz_relaxed"]["reachable"] == true);
  CHECK(report["rational"]["ghz_relaxed"]["first_time_s"].get<double>() == doctest::Approx(6.283185307179586));
  CHECK(report["rational"]["separability"]["cycles"] == "1");
  CHECK(report["engine_comparison"]["pass"] == true);
  CHECK(report["three_tangle_check"]["published_formula_certified"] == false);
}

TEST_CASE("three-tangle validation report") {
  const auto checks = three_tangle_validation(20, 1);
  CHECK(checks.size() == 2 * 22);
  CHECK(checks[0].residual == doctest::Approx(0.0));
  CHECK(checks[2].residual == doctest::Approx(1.0).epsilon(1e-12));
  const auto json = three_tangle_report(checks);
  CHECK(json["checks"].size() == 44);
}

}
