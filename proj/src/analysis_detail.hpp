#pragma once

#include "idealrank/analysis.hpp"

namespace idealrank::detail {

struct SweepSetup {
    std::size_t index = 0;
    std::vector<double> base_weights;
    std::vector<double> grid;
};

SweepSetup prepare_sweep(const DecisionProblem& problem, std::string_view criterion, int steps);

SweepPoint sweep_point(const DecisionProblem& problem, const SweepSetup& setup, double weight,
                       const EvaluateOptions& options);

SweepResult sweep_header(const DecisionProblem& problem, const SweepSetup& setup,
                         const EvaluateOptions& options);

struct TrialOutcome {
    std::vector<int> ranks;
    bool degenerate = false;
};

TrialOutcome run_trial(const DecisionProblem& problem, const NoiseModel& noise, std::uint64_t seed,
                       std::int64_t trial, const EvaluateOptions& options);

StabilityReport stability_header(const DecisionProblem& problem, const NoiseModel& noise,
                                 std::int64_t trials, std::uint64_t seed,
                                 const EvaluateOptions& options);

// Fills modal_ranking from ranking_counts.
void pick_modal_ranking(StabilityReport& report);

}  // namespace idealrank::detail
