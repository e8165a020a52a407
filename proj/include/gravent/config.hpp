#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "gravent/bipartition.hpp"
#include "gravent/geometry.hpp"
#include "gravent/oracle.hpp"
#include "gravent/phase_matrix.hpp"
#include "gravent/rational.hpp"

/// Batch front door: JSON run configuration and its validated domain objects.
namespace gravent::cli {

enum class InputMode { Geometry, Phases, RationalPhases };
enum class Engine { Closed, Oracle, Both };
enum class Measure { IConcurrence, Qk, Tangle3, Pairwise, TwoBody };

const char* to_string(InputMode m) noexcept;
const char* to_string(Engine e) noexcept;
const char* to_string(Measure m) noexcept;
Engine parse_engine(std::string_view text);
Measure parse_measure(std::string_view text);
/// Comma separated list, duplicates dropped, order kept.
std::vector<Measure> parse_measures(std::string_view text);

struct BipartitionSelector {
  enum class Kind { All, OneVsRest, Explicit };
  Kind kind = Kind::All;
  std::vector<std::string> cuts;  // Explicit only, "125|346" strings

  /// "all", "one-vs-rest" or a comma/semicolon separated list of cuts.
  static BipartitionSelector parse(std::string_view text);
};

struct RunConfig {
  InputMode mode = InputMode::Phases;
  Engine engine = Engine::Closed;
  std::vector<Measure> measures{Measure::IConcurrence};
  BipartitionSelector bipartitions;
  double t_start = 0.0;
  double t_end = 1.0;
  std::size_t steps = 100;
  std::string output;  // empty: stdout
  double tolerance = 1e-9;
  double epsilon_edge = 1e-12;
  std::size_t max_qubits = oracle::kDefaultMaxQubits;
  std::uint64_t seed = 0;
  /// User assertion that the nonzero phases are pairwise incommensurate.
  bool incommensurate = false;
};

/// A loaded configuration: the run settings plus the physical system in every
/// representation the engines need.
struct Problem {
  RunConfig run;
  std::optional<SystemSetup> setup;
  PhysicalConstants constants;
  PairPhaseTable table;
  PhaseMatrix phases;
  std::optional<RationalPhases> rational;
  std::vector<Bipartition> cuts;

  std::size_t size() const noexcept { return phases.size(); }
};

/// Throws Error(ParseError) with line/column for malformed JSON and naming
/// the field for type errors; Error(ValidationError) for semantically invalid
/// input (bad geometry, bad cuts, measures that do not fit N, ...).
Problem load_config(const std::filesystem::path& path);
Problem parse_config_text(std::string_view text);
Problem parse_config(const nlohmann::json& doc);

/// Re-checks run settings and rebuilds `cuts` after command-line overrides.
void finalize(Problem& problem);

/// steps points from t_start to t_end inclusive (a single point when steps == 1).
std::vector<double> time_grid(const RunConfig& run);

}  // namespace gravent::cli
