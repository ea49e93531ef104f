#pragma once

#include <string>

#include "idealrank/analysis.hpp"

namespace idealrank {

// Fixed-width text. Numbers at 4 dp, columns in input criterion order.
std::string render_table(const Table& table);
std::string render_table(const ExplainReport& report);

// Weighted matrix, ideals, separations and closeness sections only.
std::string render_table(const RankingReport& report,
                         DisplayRounding rounding = DisplayRounding::Nearest);

std::string render_table(const SweepResult& sweep, DisplayRounding rounding = DisplayRounding::Nearest);
std::string render_table(const StabilityReport& report);

// Comma-separated, full precision.
std::string render_delimited(const RankingReport& report);
std::string render_delimited(const ExplainReport& report);
std::string render_delimited(const SweepResult& sweep);
std::string render_delimited(const StabilityReport& report);

}  // namespace idealrank
