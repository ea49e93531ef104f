#pragma once

#include <string>
#include <vector>

#include "idealrank/errors.hpp"
#include "idealrank/matrix.hpp"

namespace idealrank {

enum class CriterionKind { Benefit, Cost };

struct Criterion {
    std::string name;
    CriterionKind kind = CriterionKind::Benefit;
    double weight = 0.0;

    friend bool operator==(const Criterion&, const Criterion&) = default;
};

// Raw decision matrix: rows follow `alternatives`, columns follow `criteria`.
struct DecisionProblem {
    std::vector<std::string> alternatives;
    std::vector<Criterion> criteria;
    Matrix scores;

    friend bool operator==(const DecisionProblem&, const DecisionProblem&) = default;
};

inline constexpr double kWeightSumTolerance = 1e-6;

struct ValidateOptions {
    // Rescale weights to sum to 1 instead of rejecting the problem.
    bool auto_normalize_weights = false;
};

// A DecisionProblem that has passed validate_problem. Only validate_problem
// can construct one.
class ValidatedProblem {
public:
    const DecisionProblem& problem() const { return problem_; }
    const std::vector<std::string>& alternatives() const { return problem_.alternatives; }
    const std::vector<Criterion>& criteria() const { return problem_.criteria; }
    const Matrix& scores() const { return problem_.scores; }
    bool weights_renormalized() const { return weights_renormalized_; }

private:
    friend ValidatedProblem validate_problem(DecisionProblem, const ValidateOptions&);
    ValidatedProblem(DecisionProblem p, bool renormalized)
        : problem_(std::move(p)), weights_renormalized_(renormalized) {}

    DecisionProblem problem_;
    bool weights_renormalized_ = false;
};

// All violations found, in a stable order; empty means valid.
std::vector<Violation> check_problem(const DecisionProblem& problem,
                                     const ValidateOptions& options = {});

// Throws Error carrying every violation when the problem is invalid.
ValidatedProblem validate_problem(DecisionProblem problem, const ValidateOptions& options = {});

std::vector<double> weights_of(const std::vector<Criterion>& criteria);

}  // namespace idealrank
