#include <map>

#include "analysis_detail.hpp"

namespace idealrank::serial {

SweepResult weight_sweep(const DecisionProblem& problem, std::string_view criterion, int steps,
                         const EvaluateOptions& options) {
    const auto setup = detail::prepare_sweep(problem, criterion, steps);
    auto result = detail::sweep_header(problem, setup, options);
    for (double w : setup.grid) result.points.push_back(detail::sweep_point(problem, setup, w, options));
    result.crossovers = find_crossovers(result.points);
    return result;
}

StabilityReport monte_carlo_stability(const DecisionProblem& problem, const NoiseModel& noise,
                                      std::int64_t trials, std::uint64_t seed,
                                      const EvaluateOptions& options) {
    auto report = detail::stability_header(problem, noise, trials, seed, options);
    std::map<std::vector<int>, RankingCount> counts;
    for (std::int64_t t = 0; t < trials; ++t) {
        const auto o = detail::run_trial(problem, noise, seed, t, options);
        if (o.degenerate) ++report.degenerate_trials;
        for (std::size_t a = 0; a < o.ranks.size(); ++a)
            ++report.frequency[a][static_cast<std::size_t>(o.ranks[a] - 1)];
        auto& rc = counts[o.ranks];
        if (rc.count == 0) {
            rc.ranks = o.ranks;
            rc.first_trial = t;
        }
        ++rc.count;
    }
    for (auto& [ranks, rc] : counts) report.ranking_counts.push_back(std::move(rc));
    detail::pick_modal_ranking(report);
    return report;
}

}  // namespace idealrank::serial
