#pragma once

#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "idealrank/problem.hpp"

namespace testing {

inline std::string source_path(const std::string& rel) { return std::string(IDEALRANK_SOURCE_DIR) + "/" + rel; }

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline idealrank::DecisionProblem paper_case() {
    using idealrank::CriterionKind;
    return {{"A1", "A2", "A3", "A4", "A5", "A6"},
            {{"C1", CriterionKind::Benefit, 0.5},
             {"C2", CriterionKind::Benefit, 0.1},
             {"C3", CriterionKind::Benefit, 0.3},
             {"C4", CriterionKind::Cost, 0.1}},
            {{7, 6, 7, 7}, {8, 8, 7, 6}, {7, 6, 6, 6}, {8, 7, 8, 6}, {6, 6, 6, 6}, {7, 8, 6, 6}}};
}

inline nlohmann::json golden() { return nlohmann::json::parse(slurp(source_path("tests/golden/paper_case.json"))); }

}  // namespace testing
