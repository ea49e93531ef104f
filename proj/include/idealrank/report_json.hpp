#pragma once

#include <json.hpp>
#include <string>

#include "idealrank/analysis.hpp"

namespace idealrank {

inline constexpr const char* kEngineVersion = "1.0.0";

nlohmann::json options_to_json(const EvaluateOptions& options);
nlohmann::json violations_to_json(const std::vector<Violation>& violations);

nlohmann::json to_json(const RankingReport& report, bool include_intermediates = true);
nlohmann::json to_json(const ExplainReport& report);
nlohmann::json to_json(const SweepResult& sweep);
nlohmann::json to_json(const StabilityReport& report);
nlohmann::json to_json(const std::vector<LeaveOneOutEntry>& entries);

}  // namespace idealrank
