#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace idealrank {

enum class ErrorCode {
    EmptyProblem,
    DimensionMismatch,
    NonPositiveScore,
    ZeroColumn,
    WeightSumViolation,
    DuplicateName,
    DegenerateProblem,
    SyntaxError,
    SchemaError,
    DuplicateEntry,
    ScoreRangeError,
    IncompleteSheet,
    UnknownName,
    InvalidArgument,
};

std::string_view to_string(ErrorCode code);

struct Violation {
    ErrorCode code;
    std::string path;  // e.g. "scores[2][3]", "criteria[1].weight", "line 4"
    std::string message;

    friend bool operator==(const Violation&, const Violation&) = default;
};

// Every user-facing failure in the library is an Error carrying one or more
// violations. code() is the first violation's code.
class Error : public std::runtime_error {
public:
    explicit Error(std::vector<Violation> violations);
    Error(ErrorCode code, std::string path, std::string message);

    ErrorCode code() const { return violations_.front().code; }
    const std::vector<Violation>& violations() const { return violations_; }

private:
    std::vector<Violation> violations_;
};

}  // namespace idealrank
