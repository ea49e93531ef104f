#include "idealrank/errors.hpp"

#include <cassert>

namespace idealrank {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::EmptyProblem: return "EmptyProblem";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NonPositiveScore: return "NonPositiveScore";
        case ErrorCode::ZeroColumn: return "ZeroColumn";
        case ErrorCode::WeightSumViolation: return "WeightSumViolation";
        case ErrorCode::DuplicateName: return "DuplicateName";
        case ErrorCode::DegenerateProblem: return "DegenerateProblem";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::SchemaError: return "SchemaError";
        case ErrorCode::DuplicateEntry: return "DuplicateEntry";
        case ErrorCode::ScoreRangeError: return "ScoreRangeError";
        case ErrorCode::IncompleteSheet: return "IncompleteSheet";
        case ErrorCode::UnknownName: return "UnknownName";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

namespace {

std::string summarize(const std::vector<Violation>& violations) {
    std::string out;
    for (const auto& v : violations) {
        if (!out.empty()) out += "; ";
        out += std::string(to_string(v.code));
        if (!v.path.empty()) out += " at " + v.path;
        out += ": " + v.message;
    }
    return out;
}

}  // namespace

Error::Error(std::vector<Violation> violations)
    : std::runtime_error(summarize(violations)), violations_(std::move(violations)) {
    assert(!violations_.empty());
}

Error::Error(ErrorCode code, std::string path, std::string message)
    : Error(std::vector<Violation>{{code, std::move(path), std::move(message)}}) {}

}  // namespace idealrank
