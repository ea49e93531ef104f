#pragma once

#include <string_view>
#include <vector>

#include "idealrank/matrix.hpp"
#include "idealrank/problem.hpp"

namespace idealrank {

// How the positive/negative ideal is picked per criterion.
//   HonorKinds: benefit -> PIS is column max, cost -> PIS is column min.
//   AllBenefit: PIS is always the column max (reproduces the published case study).
enum class IdealMode { HonorKinds, AllBenefit };

// Euclidean is the separation measure proper; Squared omits the square root
// and exists only for comparing against tabulated sums of squares.
enum class DistanceMode { Euclidean, Squared };

std::string_view to_string(IdealMode mode);
std::string_view to_string(DistanceMode mode);
std::string_view to_string(CriterionKind kind);
IdealMode parse_ideal_mode(std::string_view text);
DistanceMode parse_distance_mode(std::string_view text);
CriterionKind parse_criterion_kind(std::string_view text);

struct EvaluateOptions {
    IdealMode ideal_mode = IdealMode::HonorKinds;
    DistanceMode distance = DistanceMode::Euclidean;
    bool auto_normalize_weights = false;

    friend bool operator==(const EvaluateOptions&, const EvaluateOptions&) = default;
};

struct NormalizedMatrix {
    Matrix values;
};

struct WeightedMatrix {
    Matrix values;
};

struct IdealSolutions {
    std::vector<double> pis;
    std::vector<double> nis;
    IdealMode mode = IdealMode::HonorKinds;
};

struct SeparationMeasures {
    std::vector<double> s_plus;
    std::vector<double> s_minus;
    DistanceMode distance = DistanceMode::Euclidean;
};

struct RankingReport {
    DecisionProblem problem;  // as evaluated, after any weight renormalization
    bool weights_renormalized = false;
    EvaluateOptions options;
    NormalizedMatrix normalized;
    WeightedMatrix weighted;
    IdealSolutions ideals;
    SeparationMeasures separations;
    std::vector<double> closeness;
    std::vector<int> ranks;  // ranks[i] is alternative i's rank, 1 = best
};

// R_ij = S_ij / sqrt(sum_i S_ij^2), computed per column.
NormalizedMatrix normalize(const ValidatedProblem& problem);

// V_ij = R_ij * w_j. Throws DimensionMismatch.
WeightedMatrix apply_weights(const NormalizedMatrix& normalized,
                             const std::vector<Criterion>& criteria);

IdealSolutions ideal_solutions(const WeightedMatrix& weighted,
                               const std::vector<Criterion>& criteria, IdealMode mode);

SeparationMeasures separations(const WeightedMatrix& weighted, const IdealSolutions& ideals,
                               DistanceMode distance);

// C_i = S-_i / (S+_i + S-_i). Throws DegenerateProblem if any denominator is 0.
std::vector<double> closeness(const SeparationMeasures& separations);

// Descending by closeness; equal values keep input order.
std::vector<int> rank(const std::vector<double>& closeness);

RankingReport evaluate(const DecisionProblem& problem, const EvaluateOptions& options = {});
RankingReport evaluate(const ValidatedProblem& problem, const EvaluateOptions& options = {});

// Indices of alternatives ordered best first.
std::vector<std::size_t> order_by_rank(const std::vector<int>& ranks);

}  // namespace idealrank
