#include "idealrank/problem.hpp"

#include <cmath>
#include <fmt/format.h>
#include <numeric>
#include <set>

namespace idealrank {

namespace {

void check_unique(const std::vector<std::string>& names, std::string_view field,
                  std::vector<Violation>& out) {
    std::set<std::string_view> seen;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (!seen.insert(names[i]).second) {
            out.push_back({ErrorCode::DuplicateName, fmt::format("{}[{}]", field, i),
                           fmt::format("name '{}' appears more than once", names[i])});
        }
    }
}

double weight_sum(const std::vector<Criterion>& criteria) {
    double sum = 0.0;
    for (const auto& c : criteria) sum += c.weight;
    return sum;
}

}  // namespace

std::vector<double> weights_of(const std::vector<Criterion>& criteria) {
    std::vector<double> w;
    w.reserve(criteria.size());
    for (const auto& c : criteria) w.push_back(c.weight);
    return w;
}

std::vector<Violation> check_problem(const DecisionProblem& problem,
                                     const ValidateOptions& options) {
    std::vector<Violation> out;
    const auto n = problem.alternatives.size();
    const auto m = problem.criteria.size();

    if (n == 0) out.push_back({ErrorCode::EmptyProblem, "alternatives", "no alternatives"});
    if (m == 0) out.push_back({ErrorCode::EmptyProblem, "criteria", "no criteria"});
    if (!out.empty()) return out;

    if (problem.scores.rows() != n || problem.scores.cols() != m) {
        out.push_back({ErrorCode::DimensionMismatch, "scores",
                       fmt::format("score matrix is {}x{}, expected {}x{}", problem.scores.rows(),
                                   problem.scores.cols(), n, m)});
        return out;
    }

    std::vector<std::string> criterion_names;
    for (const auto& c : problem.criteria) criterion_names.push_back(c.name);
    check_unique(problem.alternatives, "alternatives", out);
    check_unique(criterion_names, "criteria", out);

    for (std::size_t j = 0; j < m; ++j) {
        bool all_zero = true;
        for (std::size_t i = 0; i < n; ++i) all_zero = all_zero && problem.scores(i, j) == 0.0;
        if (all_zero) {
            out.push_back({ErrorCode::ZeroColumn, fmt::format("scores[*][{}]", j),
                           fmt::format("criterion '{}' has only zero scores",
                                       problem.criteria[j].name)});
            continue;
        }
        for (std::size_t i = 0; i < n; ++i) {
            const double s = problem.scores(i, j);
            if (!(s > 0.0) || !std::isfinite(s)) {
                out.push_back({ErrorCode::NonPositiveScore, fmt::format("scores[{}][{}]", i, j),
                               fmt::format("score {} is not a positive finite number", s)});
            }
        }
    }

    bool weights_ok = true;
    for (std::size_t j = 0; j < m; ++j) {
        const double w = problem.criteria[j].weight;
        if (!(w >= 0.0) || !std::isfinite(w)) {
            weights_ok = false;
            out.push_back({ErrorCode::WeightSumViolation, fmt::format("criteria[{}].weight", j),
                           fmt::format("weight {} is negative or not finite", w)});
        }
    }
    if (weights_ok) {
        const double sum = weight_sum(problem.criteria);
        const bool can_rescale = options.auto_normalize_weights && sum > 0.0;
        if (std::abs(sum - 1.0) > kWeightSumTolerance && !can_rescale) {
            out.push_back({ErrorCode::WeightSumViolation, "criteria",
                           fmt::format("weights sum to {}, expected 1 within {}", sum,
                                       kWeightSumTolerance)});
        }
    }
    return out;
}

ValidatedProblem validate_problem(DecisionProblem problem, const ValidateOptions& options) {
    auto violations = check_problem(problem, options);
    if (!violations.empty()) throw Error(std::move(violations));

    bool renormalized = false;
    const double sum = weight_sum(problem.criteria);
    if (options.auto_normalize_weights && std::abs(sum - 1.0) > kWeightSumTolerance) {
        for (auto& c : problem.criteria) c.weight /= sum;
        renormalized = true;
    }
    return ValidatedProblem(std::move(problem), renormalized);
}

}  // namespace idealrank
