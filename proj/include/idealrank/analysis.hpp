#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "idealrank/topsis.hpp"

namespace idealrank {

// How 4-dp values are rounded for display. Up (toward +inf) is what the
// published case-study tables use; Nearest is the default.
enum class DisplayRounding { Nearest, Up };

std::string_view to_string(DisplayRounding rounding);
DisplayRounding parse_display_rounding(std::string_view text);
std::string format_fixed(double value, DisplayRounding rounding = DisplayRounding::Nearest);

struct Table {
    std::string title;
    std::string corner;  // header of the row-label column
    std::vector<std::string> column_labels;
    std::vector<std::string> row_labels;
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> notes;
};

// Decision matrix, normalized, weighted, ideal solutions, separations,
// closeness + ranks, in that order.
struct ExplainReport {
    std::vector<Table> tables;
    EvaluateOptions options;
    DisplayRounding rounding = DisplayRounding::Nearest;
    bool weights_renormalized = false;
};

enum ExplainTable : std::size_t {
    kDecisionTable = 0,
    kNormalizedTable,
    kWeightedTable,
    kIdealTable,
    kSeparationTable,
    kClosenessTable,
};

ExplainReport explain(const RankingReport& report, DisplayRounding rounding = DisplayRounding::Nearest);
ExplainReport explain(const DecisionProblem& problem, const EvaluateOptions& options,
                      DisplayRounding rounding = DisplayRounding::Nearest);

// Weight vector with criterion `index` set to `weight` and the others rescaled
// proportionally so the total stays 1. If the others sum to zero the remaining
// mass is split equally among them.
std::vector<double> rescaled_weights(const std::vector<double>& base, std::size_t index, double weight);

struct SweepPoint {
    double weight = 0.0;                // swept criterion's weight
    std::vector<double> weights;        // full weight vector used
    std::vector<double> closeness;      // empty when `error` is set
    std::vector<int> ranks;
    std::optional<Violation> error;     // e.g. DegenerateProblem at this point
};

struct Crossover {
    double weight_low = 0.0;
    double weight_high = 0.0;
    std::size_t from = 0;  // top alternative at weight_low
    std::size_t to = 0;    // top alternative at weight_high
};

struct SweepResult {
    std::string criterion;
    std::size_t criterion_index = 0;
    EvaluateOptions options;
    std::vector<std::string> alternatives;
    std::vector<SweepPoint> points;  // grid k/(steps-1), k = 0..steps-1
    std::vector<Crossover> crossovers;
};

// Evaluates the problem on an evenly spaced weight grid for one criterion.
// Grid points run concurrently. Throws UnknownName / InvalidArgument.
SweepResult weight_sweep(const DecisionProblem& problem, std::string_view criterion, int steps,
                         const EvaluateOptions& options = {});

// Top-rank changes between consecutive non-degenerate grid points.
std::vector<Crossover> find_crossovers(const std::vector<SweepPoint>& points);

struct LeaveOneOutEntry {
    std::string criterion;
    std::optional<RankingReport> report;  // absent when `errors` is non-empty
    std::vector<Violation> errors;
};

// One entry per criterion, re-evaluated without it. Needs >= 2 criteria.
std::vector<LeaveOneOutEntry> leave_one_out(const DecisionProblem& problem,
                                            const EvaluateOptions& options = {});

// Each score moves by a uniform integer in [-magnitude, magnitude], clamped to
// the 1..9 scale (scores already outside it are not pulled in).
struct NoiseModel {
    int magnitude = 1;

    std::string descriptor() const;
};

struct RankingCount {
    std::vector<int> ranks;
    std::int64_t count = 0;
    std::int64_t first_trial = 0;
};

struct StabilityReport {
    std::int64_t trials = 0;
    std::uint64_t seed = 0;
    NoiseModel noise;
    EvaluateOptions options;
    std::vector<std::string> alternatives;
    std::vector<int> baseline_ranks;
    // frequency[a][r] = trials in which alternative a took rank r + 1
    std::vector<std::vector<std::int64_t>> frequency;
    // distinct rankings, lexicographic by rank vector
    std::vector<RankingCount> ranking_counts;
    std::vector<int> modal_ranking;  // most frequent; earliest first trial breaks ties
    std::int64_t degenerate_trials = 0;
};

// Baseline problem perturbed per trial from the (seed, trial, cell) stream.
// Trials run concurrently; the report does not depend on scheduling.
StabilityReport monte_carlo_stability(const DecisionProblem& problem, const NoiseModel& noise,
                                      std::int64_t trials, std::uint64_t seed,
                                      const EvaluateOptions& options = {});

// Scores of trial `trial`, row-major cell index i * criteria + j.
Matrix perturbed_scores(const Matrix& scores, const NoiseModel& noise, std::uint64_t seed,
                        std::int64_t trial);

// Trials whose top-|members| alternatives are exactly `members`.
std::int64_t top_set_frequency(const StabilityReport& report, const std::vector<std::size_t>& members);

// Single-threaded reference versions, kept for testing and benchmarking.
namespace serial {

SweepResult weight_sweep(const DecisionProblem& problem, std::string_view criterion, int steps,
                         const EvaluateOptions& options = {});

StabilityReport monte_carlo_stability(const DecisionProblem& problem, const NoiseModel& noise,
                                      std::int64_t trials, std::uint64_t seed,
                                      const EvaluateOptions& options = {});

}  // namespace serial

}  // namespace idealrank
