#include "gravent/config.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "gravent/error.hpp"

namespace gravent::cli {

using nlohmann::json;

const char* to_string(InputMode m) noexcept {
  switch (m) {
    case InputMode::Geometry: return "geometry";
    case InputMode::Phases: return "phases";
    case InputMode::RationalPhases: return "rational-phases";
  }
  return "unknown";
}

const char* to_string(Engine e) noexcept {
  switch (e) {
    case Engine::Closed: return "closed";
    case Engine::Oracle: return "oracle";
    case Engine::Both: return "both";
  }
  return "unknown";
}

const char* to_string(Measure m) noexcept {
  switch (m) {
    case Measure::IConcurrence: return "iconcurrence";
    case Measure::Qk: return "q_k";
    case Measure::Tangle3: return "tangle3";
    case Measure::Pairwise: return "pairwise";
    case Measure::TwoBody: return "two_body";
  }
  return "unknown";
}

Engine parse_engine(std::string_view text) {
  for (Engine e : {Engine::Closed, Engine::Oracle, Engine::Both}) {
    if (text == to_string(e)) return e;
  }
  throw Error(ErrorCode::ParseError, "engine must be closed, oracle or both, got \"" + std::string(text) + "\"");
}

Measure parse_measure(std::string_view text) {
  for (Measure m : {Measure::IConcurrence, Measure::Qk, Measure::Tangle3, Measure::Pairwise, Measure::TwoBody}) {
    if (text == to_string(m)) return m;
  }
  throw Error(ErrorCode::ParseError, "unknown measure \"" + std::string(text) + "\"");
}

namespace {

std::vector<std::string> split(std::string_view text, std::string_view seps) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (seps.find(c) != std::string_view::npos) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

[[noreturn]] void field_error(const std::string& field, const std::string& why) {
  throw Error(ErrorCode::ParseError, "field \"" + field + "\": " + why);
}

const json& require(const json& obj, const char* key, const std::string& path) {
  if (!obj.contains(key)) field_error(path + key, "missing");
  return obj.at(key);
}

double number(const json& v, const std::string& field) {
  if (!v.is_number()) field_error(field, "expected a number");
  return v.get<double>();
}

std::uint64_t count(const json& v, const std::string& field) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) field_error(field, "expected a nonnegative integer");
  return v.get<std::uint64_t>();
}

std::string text(const json& v, const std::string& field) {
  if (!v.is_string()) field_error(field, "expected a string");
  return v.get<std::string>();
}

void reject_unknown(const json& obj, std::initializer_list<const char*> known, const std::string& path) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (std::none_of(known.begin(), known.end(), [&](const char* k) { return it.key() == k; })) {
      field_error(path + it.key(), "unknown key");
    }
  }
}

Vec3 vec3(const json& v, const std::string& field) {
  if (!v.is_array() || v.size() != 3) field_error(field, "expected [x, y, z]");
  return {number(v[0], field + "[0]"), number(v[1], field + "[1]"), number(v[2], field + "[2]")};
}

std::vector<std::vector<double>> matrix(const json& v, const std::string& field) {
  if (!v.is_array()) field_error(field, "expected an array of rows");
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string row_field = field + "[" + std::to_string(i) + "]";
    if (!v[i].is_array()) field_error(row_field, "expected an array");
    std::vector<double> row;
    for (std::size_t j = 0; j < v[i].size(); ++j) {
      row.push_back(number(v[i][j], row_field + "[" + std::to_string(j) + "]"));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Rational rational_entry(const json& v, const std::string& field) {
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (!v.is_string()) field_error(field, "expected \"n/d\" or an integer");
  try {
    return Rational::parse(v.get<std::string>());
  } catch (const Error& e) {
    field_error(field, e.what());
  }
}

template <class F>
auto as_validation(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    throw Error(ErrorCode::ValidationError, e.what());
  }
}

void load_geometry(const json& doc, Problem& out) {
  const json& masses = require(doc, "masses", "");
  if (!masses.is_array()) field_error("masses", "expected an array");
  SystemSetup setup;
  for (std::size_t i = 0; i < masses.size(); ++i) {
    const std::string path = "masses[" + std::to_string(i) + "].";
    const json& m = masses[i];
    if (!m.is_object()) field_error(path, "expected an object");
    reject_unknown(m, {"mass_kg", "loc0", "loc1"}, path);
    setup.masses.push_back({number(require(m, "mass_kg", path), path + "mass_kg"),
                            vec3(require(m, "loc0", path), path + "loc0"),
                            vec3(require(m, "loc1", path), path + "loc1")});
  }
  if (doc.contains("min_distance_m")) {
    setup.min_pair_distance = number(doc["min_distance_m"], "min_distance_m");
  }
  if (doc.contains("constants")) {
    const json& c = doc["constants"];
    reject_unknown(c, {"G", "hbar"}, "constants.");
    if (c.contains("G")) out.constants.G = number(c["G"], "constants.G");
    if (c.contains("hbar")) out.constants.hbar = number(c["hbar"], "constants.hbar");
  }
  const SetupDiagnostics diag = validate_setup(setup);
  if (!diag.ok()) {
    std::string msg = "invalid setup:";
    for (const SetupViolation& v : diag.violations) msg += "\n  " + v.message;
    throw Error(ErrorCode::ValidationError, msg);
  }
  out.table = as_validation([&] { return phase_table(setup, out.constants); });
  out.phases = entangling_phases(out.table);
  out.setup = std::move(setup);
}

void load_pair_table(const json& v, Problem& out) {
  if (!v.is_object() || v.empty()) field_error("pair_phase_table", "expected an object keyed \"p-q\"");
  std::size_t n = 0;
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, BranchQuad>> entries;
  for (auto it = v.begin(); it != v.end(); ++it) {
    const std::string field = "pair_phase_table." + it.key();
    const std::vector<std::string> parts = split(it.key(), "-");
    std::size_t p = 0, q = 0;
    try {
      if (parts.size() != 2) throw std::invalid_argument("pair");
      p = std::stoul(parts[0]);
      q = std::stoul(parts[1]);
    } catch (const std::exception&) {
      field_error(field, "key must look like \"1-2\"");
    }
    if (p < 1 || q < 1 || p == q) field_error(field, "masses are numbered from 1 and must differ");
    const json& rates = it.value();
    if (!rates.is_array() || rates.size() != 4) field_error(field, "expected [phi00, phi01, phi10, phi11]");
    BranchQuad quad{};
    for (std::size_t i = 0; i < 4; ++i) quad[i] = number(rates[i], field + "[" + std::to_string(i) + "]");
    n = std::max({n, p, q});
    entries.push_back({{p - 1, q - 1}, quad});
  }
  PairPhaseTable table(n);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& [pq, quad] : entries) {
    const auto key = std::minmax(pq.first, pq.second);
    if (!seen.insert(key).second) {
      throw Error(ErrorCode::ValidationError, "pair_phase_table lists a pair twice");
    }
    table.set(pq.first, pq.second, quad);
  }
  if (seen.size() != pair_count(n)) {
    throw Error(ErrorCode::ValidationError,
                "pair_phase_table must list all " + std::to_string(pair_count(n)) + " pairs of " +
                    std::to_string(n) + " masses");
  }
  out.table = std::move(table);
  out.phases = as_validation([&] { return entangling_phases(out.table); });
}

void load_random(const json& v, Problem& out) {
  reject_unknown(v, {"n", "low", "high", "seed"}, "random_phases.");
  const std::size_t n = count(require(v, "n", "random_phases."), "random_phases.n");
  const double low = v.contains("low") ? number(v["low"], "random_phases.low") : 0.0;
  const double high = v.contains("high") ? number(v["high"], "random_phases.high") : 5.0;
  const std::uint64_t seed = v.contains("seed") ? count(v["seed"], "random_phases.seed") : out.run.seed;
  if (n < 2 || n > kMaxMasses || !(high > low) || low < 0.0) {
    throw Error(ErrorCode::ValidationError, "random_phases needs 2 <= n <= 63 and 0 <= low < high");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(low, high);
  PhaseMatrix m(n);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) m.set(p, q, dist(rng));
  }
  out.phases = std::move(m);
  out.table = PairPhaseTable::from_phase_matrix(out.phases);
}

void load_rational(const json& doc, Problem& out) {
  const json& r = require(doc, "rational", "");
  reject_unknown(r, {"base_rad_per_s", "multipliers"}, "rational.");
  const double base = number(require(r, "base_rad_per_s", "rational."), "rational.base_rad_per_s");
  const json& rows = require(r, "multipliers", "rational.");
  if (!rows.is_array()) field_error("rational.multipliers", "expected an array of rows");
  std::vector<std::vector<Rational>> m;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string field = "rational.multipliers[" + std::to_string(i) + "]";
    if (!rows[i].is_array()) field_error(field, "expected an array");
    std::vector<Rational> row;
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      row.push_back(rational_entry(rows[i][j], field + "[" + std::to_string(j) + "]"));
    }
    m.push_back(std::move(row));
  }
  out.rational = as_validation([&] { return RationalPhases(base, std::move(m)); });
  out.phases = out.rational->to_phase_matrix();
  out.table = PairPhaseTable::from_phase_matrix(out.phases);
}

void load_run(const json& run, RunConfig& cfg) {
  reject_unknown(run,
                 {"engine", "measures", "bipartitions", "t_start", "t_end", "steps", "output",
                  "tolerance", "epsilon_edge", "oracle_max_qubits", "seed"},
                 "run.");
  if (run.contains("engine")) cfg.engine = parse_engine(text(run["engine"], "run.engine"));
  if (run.contains("measures")) {
    const json& m = run["measures"];
    if (m.is_string()) {
      cfg.measures = parse_measures(m.get<std::string>());
    } else if (m.is_array()) {
      std::string joined;
      for (std::size_t i = 0; i < m.size(); ++i) {
        joined += text(m[i], "run.measures[" + std::to_string(i) + "]") + ",";
      }
      cfg.measures = parse_measures(joined);
    } else {
      field_error("run.measures", "expected a list of measure names");
    }
  }
  if (run.contains("bipartitions")) {
    const json& b = run["bipartitions"];
    if (b.is_string()) {
      cfg.bipartitions = BipartitionSelector::parse(b.get<std::string>());
    } else if (b.is_array()) {
      cfg.bipartitions.kind = BipartitionSelector::Kind::Explicit;
      for (std::size_t i = 0; i < b.size(); ++i) {
        cfg.bipartitions.cuts.push_back(text(b[i], "run.bipartitions[" + std::to_string(i) + "]"));
      }
    } else {
      field_error("run.bipartitions", "expected \"all\", \"one-vs-rest\" or a list of cuts");
    }
  }
  if (run.contains("t_start")) cfg.t_start = number(run["t_start"], "run.t_start");
  if (run.contains("t_end")) cfg.t_end = number(run["t_end"], "run.t_end");
  if (run.contains("steps")) cfg.steps = count(run["steps"], "run.steps");
  if (run.contains("output")) cfg.output = text(run["output"], "run.output");
  if (run.contains("tolerance")) cfg.tolerance = number(run["tolerance"], "run.tolerance");
  if (run.contains("epsilon_edge")) cfg.epsilon_edge = number(run["epsilon_edge"], "run.epsilon_edge");
  if (run.contains("oracle_max_qubits")) {
    cfg.max_qubits = count(run["oracle_max_qubits"], "run.oracle_max_qubits");
  }
  if (run.contains("seed")) cfg.seed = count(run["seed"], "run.seed");
}

}  // namespace

std::vector<Measure> parse_measures(std::string_view list) {
  std::vector<Measure> out;
  for (const std::string& name : split(list, ",")) {
    const Measure m = parse_measure(name);
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
  }
  if (out.empty()) throw Error(ErrorCode::ParseError, "no measures selected");
  return out;
}

BipartitionSelector BipartitionSelector::parse(std::string_view text) {
  BipartitionSelector sel;
  if (text == "all") return sel;
  if (text == "one-vs-rest") {
    sel.kind = Kind::OneVsRest;
    return sel;
  }
  sel.kind = Kind::Explicit;
  // "125|346;13|2456" or with commas when every label is a single digit
  const bool has_semicolon = text.find(';') != std::string_view::npos;
  sel.cuts = split(text, has_semicolon ? ";" : ",");
  if (sel.cuts.empty()) throw Error(ErrorCode::ParseError, "empty bipartition list");
  return sel;
}

Problem parse_config(const json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "configuration must be a JSON object");
  reject_unknown(doc,
                 {"mode", "constants", "masses", "min_distance_m", "phase_matrix_rad_per_s",
                  "pair_phase_table", "random_phases", "rational", "incommensurate", "run"},
                 "");
  Problem out;
  const std::string mode = text(require(doc, "mode", ""), "mode");
  if (doc.contains("run")) {
    if (!doc["run"].is_object()) field_error("run", "expected an object");
    load_run(doc["run"], out.run);
  }
  if (doc.contains("incommensurate")) {
    if (!doc["incommensurate"].is_boolean()) field_error("incommensurate", "expected true or false");
    out.run.incommensurate = doc["incommensurate"].get<bool>();
  }
  if (mode == "geometry") {
    out.run.mode = InputMode::Geometry;
    load_geometry(doc, out);
  } else if (mode == "phases") {
    out.run.mode = InputMode::Phases;
    const int sources = static_cast<int>(doc.contains("phase_matrix_rad_per_s")) +
                        static_cast<int>(doc.contains("pair_phase_table")) +
                        static_cast<int>(doc.contains("random_phases"));
    if (sources != 1) {
      throw Error(ErrorCode::ParseError,
                  "phases mode needs exactly one of phase_matrix_rad_per_s, pair_phase_table, random_phases");
    }
    if (doc.contains("phase_matrix_rad_per_s")) {
      const auto rows = matrix(doc["phase_matrix_rad_per_s"], "phase_matrix_rad_per_s");
      out.phases = as_validation([&] { return PhaseMatrix::from_rows(rows); });
      out.table = PairPhaseTable::from_phase_matrix(out.phases);
    } else if (doc.contains("pair_phase_table")) {
      load_pair_table(doc["pair_phase_table"], out);
    } else {
      load_random(doc["random_phases"], out);
    }
  } else if (mode == "rational-phases") {
    out.run.mode = InputMode::RationalPhases;
    load_rational(doc, out);
  } else {
    field_error("mode", "expected geometry, phases or rational-phases");
  }
  finalize(out);
  return out;
}

Problem parse_config_text(std::string_view content) {
  json doc;
  try {
    doc = json::parse(content.begin(), content.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < content.size(); ++i) {
      if (content[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorCode::ParseError,
                "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + e.what());
  }
  return parse_config(doc);
}

Problem load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

void finalize(Problem& problem) {
  RunConfig& run = problem.run;
  const std::size_t n = problem.size();
  auto invalid = [](const std::string& why) { return Error(ErrorCode::ValidationError, why); };
  if (n < 2) throw invalid("at least two masses are required");
  if (!(run.t_start >= 0.0) || !(run.t_end > run.t_start)) throw invalid("need t_end > t_start >= 0");
  if (run.steps < 1) throw invalid("steps must be >= 1");
  if (!(run.tolerance > 0.0)) throw invalid("tolerance must be positive");
  if (!(run.epsilon_edge >= 0.0)) throw invalid("epsilon_edge must be >= 0");
  if (run.engine != Engine::Closed && n > run.max_qubits) {
    throw invalid("N = " + std::to_string(n) + " exceeds the oracle cap of " + std::to_string(run.max_qubits));
  }
  for (Measure m : run.measures) {
    if (m == Measure::TwoBody && n != 2) throw invalid("two_body needs N = 2");
    if ((m == Measure::Tangle3 || m == Measure::Pairwise) && n != 3) {
      throw invalid(std::string(to_string(m)) + " needs N = 3");
    }
  }
  problem.cuts.clear();
  switch (run.bipartitions.kind) {
    case BipartitionSelector::Kind::All:
      if (n > 20) throw invalid("\"all\" bipartitions limited to N <= 20; list them explicitly");
      problem.cuts = all_bipartitions(n);
      break;
    case BipartitionSelector::Kind::OneVsRest:
      problem.cuts = one_vs_rest_bipartitions(n);
      break;
    case BipartitionSelector::Kind::Explicit:
      for (const std::string& s : run.bipartitions.cuts) {
        problem.cuts.push_back(as_validation([&] { return Bipartition::parse(s, n); }));
      }
      break;
  }
  std::sort(problem.cuts.begin(), problem.cuts.end(),
            [](const Bipartition& a, const Bipartition& b) { return a.to_string() < b.to_string(); });
  problem.cuts.erase(std::unique(problem.cuts.begin(), problem.cuts.end()), problem.cuts.end());
}

std::vector<double> time_grid(const RunConfig& run) {
  std::vector<double> grid;
  if (run.steps == 1) return {run.t_start};
  const double span = run.t_end - run.t_start;
  for (std::size_t i = 0; i < run.steps; ++i) {
    grid.push_back(i + 1 == run.steps
                       ? run.t_end
                       : run.t_start + span * static_cast<double>(i) / static_cast<double>(run.steps - 1));
  }
  return grid;
}

}  // namespace gravent::cli
