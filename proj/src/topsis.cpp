#include "idealrank/topsis.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <numeric>

namespace idealrank {

std::string_view to_string(IdealMode mode) {
    return mode == IdealMode::HonorKinds ? "honor-kinds" : "all-benefit";
}

std::string_view to_string(DistanceMode mode) {
    return mode == DistanceMode::Euclidean ? "euclidean" : "squared";
}

std::string_view to_string(CriterionKind kind) {
    return kind == CriterionKind::Benefit ? "benefit" : "cost";
}

IdealMode parse_ideal_mode(std::string_view text) {
    if (text == "honor-kinds") return IdealMode::HonorKinds;
    if (text == "all-benefit") return IdealMode::AllBenefit;
    throw Error(ErrorCode::InvalidArgument, "ideal_mode",
                fmt::format("unknown ideal mode '{}'", text));
}

DistanceMode parse_distance_mode(std::string_view text) {
    if (text == "euclidean") return DistanceMode::Euclidean;
    if (text == "squared") return DistanceMode::Squared;
    throw Error(ErrorCode::InvalidArgument, "distance",
                fmt::format("unknown distance '{}'", text));
}

CriterionKind parse_criterion_kind(std::string_view text) {
    if (text == "benefit") return CriterionKind::Benefit;
    if (text == "cost") return CriterionKind::Cost;
    throw Error(ErrorCode::SchemaError, "kind",
                fmt::format("criterion kind must be 'benefit' or 'cost', got '{}'", text));
}

NormalizedMatrix normalize(const ValidatedProblem& problem) {
    const Matrix& s = problem.scores();
    Matrix r(s.rows(), s.cols());
    for (std::size_t j = 0; j < s.cols(); ++j) {
        double sum_sq = 0.0;
        for (std::size_t i = 0; i < s.rows(); ++i) sum_sq += s(i, j) * s(i, j);
        const double norm = std::sqrt(sum_sq);
        for (std::size_t i = 0; i < s.rows(); ++i) r(i, j) = s(i, j) / norm;
    }
    return {std::move(r)};
}

WeightedMatrix apply_weights(const NormalizedMatrix& normalized,
                             const std::vector<Criterion>& criteria) {
    const Matrix& r = normalized.values;
    if (r.cols() != criteria.size()) {
        throw Error(ErrorCode::DimensionMismatch, "criteria",
                    fmt::format("{} criteria for {} matrix columns", criteria.size(), r.cols()));
    }
    Matrix v(r.rows(), r.cols());
    for (std::size_t i = 0; i < r.rows(); ++i)
        for (std::size_t j = 0; j < r.cols(); ++j) v(i, j) = r(i, j) * criteria[j].weight;
    return {std::move(v)};
}

IdealSolutions ideal_solutions(const WeightedMatrix& weighted,
                               const std::vector<Criterion>& criteria, IdealMode mode) {
    const Matrix& v = weighted.values;
    if (v.cols() != criteria.size()) {
        throw Error(ErrorCode::DimensionMismatch, "criteria",
                    fmt::format("{} criteria for {} matrix columns", criteria.size(), v.cols()));
    }
    IdealSolutions out{std::vector<double>(v.cols()), std::vector<double>(v.cols()), mode};
    for (std::size_t j = 0; j < v.cols(); ++j) {
        const auto col = v.column(j);
        const auto [lo, hi] = std::minmax_element(col.begin(), col.end());
        const bool cost = mode == IdealMode::HonorKinds && criteria[j].kind == CriterionKind::Cost;
        out.pis[j] = cost ? *lo : *hi;
        out.nis[j] = cost ? *hi : *lo;
    }
    return out;
}

namespace {

double distance_to(std::span<const double> row, const std::vector<double>& ref,
                   DistanceMode mode) {
    double sum_sq = 0.0;
    for (std::size_t j = 0; j < row.size(); ++j) {
        const double d = row[j] - ref[j];
        sum_sq += d * d;
    }
    return mode == DistanceMode::Euclidean ? std::sqrt(sum_sq) : sum_sq;
}

}  // namespace

SeparationMeasures separations(const WeightedMatrix& weighted, const IdealSolutions& ideals,
                               DistanceMode distance) {
    const Matrix& v = weighted.values;
    if (ideals.pis.size() != v.cols() || ideals.nis.size() != v.cols()) {
        throw Error(ErrorCode::DimensionMismatch, "ideals",
                    "ideal vectors do not match the weighted matrix");
    }
    SeparationMeasures out{std::vector<double>(v.rows()), std::vector<double>(v.rows()), distance};
    for (std::size_t i = 0; i < v.rows(); ++i) {
        out.s_plus[i] = distance_to(v.row(i), ideals.pis, distance);
        out.s_minus[i] = distance_to(v.row(i), ideals.nis, distance);
    }
    return out;
}

std::vector<double> closeness(const SeparationMeasures& sep) {
    if (sep.s_plus.size() != sep.s_minus.size()) {
        throw Error(ErrorCode::DimensionMismatch, "separations",
                    "s_plus and s_minus differ in length");
    }
    std::vector<double> c(sep.s_plus.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        const double denom = sep.s_plus[i] + sep.s_minus[i];
        if (denom == 0.0) {
            throw Error(ErrorCode::DegenerateProblem, fmt::format("alternatives[{}]", i),
                        "positive and negative ideals coincide; closeness is undefined");
        }
        c[i] = sep.s_minus[i] / denom;
    }
    return c;
}

std::vector<int> rank(const std::vector<double>& closeness) {
    std::vector<std::size_t> order(closeness.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return closeness[a] > closeness[b]; });
    std::vector<int> ranks(closeness.size());
    for (std::size_t r = 0; r < order.size(); ++r) ranks[order[r]] = static_cast<int>(r) + 1;
    return ranks;
}

std::vector<std::size_t> order_by_rank(const std::vector<int>& ranks) {
    std::vector<std::size_t> order(ranks.size());
    for (std::size_t i = 0; i < ranks.size(); ++i) order[static_cast<std::size_t>(ranks[i] - 1)] = i;
    return order;
}

RankingReport evaluate(const ValidatedProblem& problem, const EvaluateOptions& options) {
    RankingReport report;
    report.problem = problem.problem();
    report.weights_renormalized = problem.weights_renormalized();
    report.options = options;
    report.normalized = normalize(problem);
    report.weighted = apply_weights(report.normalized, problem.criteria());
    report.ideals = ideal_solutions(report.weighted, problem.criteria(), options.ideal_mode);
    report.separations = separations(report.weighted, report.ideals, options.distance);
    report.closeness = closeness(report.separations);
    report.ranks = rank(report.closeness);
    return report;
}

RankingReport evaluate(const DecisionProblem& problem, const EvaluateOptions& options) {
    return evaluate(validate_problem(problem, {options.auto_normalize_weights}), options);
}

}  // namespace idealrank
