#pragma once

#include <json.hpp>
#include <string>
#include <string_view>
#include <vector>

#include "idealrank/problem.hpp"

namespace idealrank {

// StructuredObject: {"criteria": [{name, kind, weight}], "alternatives": [...], "scores": [[...]]}
// DelimitedTable: header row of criterion names, a "kind" row, a "weight" row,
//                 then one "<alternative>,<score>..." row per alternative.
enum class ProblemFormat { StructuredObject, DelimitedTable };

struct ParseOptions {
    // Accept a document without scores (an empty matrix is returned). Used
    // when scores come from scoresheets instead.
    bool allow_missing_scores = false;
};

// A document whose first non-blank byte is '{' is structured; anything else is delimited.
ProblemFormat detect_format(std::string_view bytes);

// Throws Error with SyntaxError or SchemaError. Semantic checks (positive
// scores, weight sum, ...) are left to validate_problem.
DecisionProblem parse_problem(std::string_view bytes, ProblemFormat format,
                              const ParseOptions& options = {});
DecisionProblem parse_problem(std::string_view bytes, const ParseOptions& options = {});

DecisionProblem problem_from_json(const nlohmann::json& doc, const ParseOptions& options = {});
nlohmann::json problem_to_json(const DecisionProblem& problem);

std::string serialize_problem(const DecisionProblem& problem, ProblemFormat format);

struct ScoreEntry {
    std::string alternative;
    std::string criterion;
    int score = 0;

    friend bool operator==(const ScoreEntry&, const ScoreEntry&) = default;
};

struct Scoresheet {
    std::string respondent;
    std::vector<ScoreEntry> entries;

    friend bool operator==(const Scoresheet&, const Scoresheet&) = default;
};

inline constexpr int kMinScore = 1;
inline constexpr int kMaxScore = 9;

// Comma-separated with header `respondent,alternative,criterion,score`.
// One sheet per respondent in order of first appearance; entry order preserved.
std::vector<Scoresheet> parse_scoresheets(std::string_view bytes);

enum class AggregateMethod { ArithmeticMean, Median };

AggregateMethod parse_aggregate_method(std::string_view text);
std::string_view to_string(AggregateMethod method);

// Combines respondents cell by cell. Cells stay real-valued. Row/column order
// follows `alternatives` / `criteria`.
DecisionProblem aggregate(const std::vector<Scoresheet>& sheets, AggregateMethod method,
                          const std::vector<Criterion>& criteria,
                          const std::vector<std::string>& alternatives);

}  // namespace idealrank
