#pragma once

#include <optional>
#include <vector>

#include "json.hpp"

#include "gravent/config.hpp"
#include "gravent/graph.hpp"
#include "gravent/sweep.hpp"
#include "gravent/tangle_check.hpp"

namespace gravent::cli {

nlohmann::json to_json(const graph::EntanglementGraph& g, bool marked_incommensurate);
nlohmann::json to_json(const std::optional<graph::GhzSchedule>& ghz);
nlohmann::json to_json(const graph::SeparabilitySchedule& s);
nlohmann::json to_json(const SetupDiagnostics& d);
nlohmann::json to_json(const ComparisonReport& c);
nlohmann::json to_json(const ThreeTangleCheck& c);

/// Published 3-tangle against the residual on the anchors (product, GHZ)
/// plus `random_draws` seeded random phase draws.
std::vector<ThreeTangleCheck> three_tangle_validation(std::size_t random_draws, std::uint64_t seed);
nlohmann::json three_tangle_report(const std::vector<ThreeTangleCheck>& checks);

/// Graph predicates, GHZ/separability findings (rational input only), setup
/// diagnostics (geometry input only) and, when given, the engine comparison.
nlohmann::json build_report(const Problem& problem, const std::optional<ComparisonReport>& comparison);

}  // namespace gravent::cli
