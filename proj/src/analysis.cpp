#include "idealrank/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <map>

#include "analysis_detail.hpp"
#include "idealrank/seed_stream.hpp"

namespace idealrank {

std::string_view to_string(DisplayRounding rounding) {
    return rounding == DisplayRounding::Nearest ? "nearest" : "up";
}

DisplayRounding parse_display_rounding(std::string_view text) {
    if (text == "nearest") return DisplayRounding::Nearest;
    if (text == "up") return DisplayRounding::Up;
    throw Error(ErrorCode::InvalidArgument, "rounding", fmt::format("unknown rounding '{}'", text));
}

std::string format_fixed(double value, DisplayRounding rounding) {
    if (rounding == DisplayRounding::Up) {
        // the small offset keeps exact 4-dp values (0.5, 1.0) from moving up a step
        value = std::ceil(value * 1e4 - 1e-7) / 1e4;
    }
    return fmt::format("{:.4f}", value + 0.0);
}

namespace {

Table matrix_table(std::string title, const Matrix& values, const DecisionProblem& problem,
                   DisplayRounding rounding) {
    Table t;
    t.title = std::move(title);
    t.corner = "Alternative";
    for (const auto& c : problem.criteria) t.column_labels.push_back(c.name);
    t.row_labels = problem.alternatives;
    for (std::size_t i = 0; i < values.rows(); ++i) {
        std::vector<std::string> row;
        for (double v : values.row(i)) row.push_back(format_fixed(v, rounding));
        t.cells.push_back(std::move(row));
    }
    return t;
}

}  // namespace

ExplainReport explain(const RankingReport& report, DisplayRounding rounding) {
    const auto& p = report.problem;
    ExplainReport out;
    out.options = report.options;
    out.rounding = rounding;
    out.weights_renormalized = report.weights_renormalized;

    Table decision = matrix_table("Decision matrix", p.scores, p, rounding);
    std::string kinds = "kind:";
    std::string weights = "weight:";
    for (const auto& c : p.criteria) {
        kinds += fmt::format(" {}={}", c.name, to_string(c.kind));
        weights += fmt::format(" {}={}", c.name, format_fixed(c.weight, rounding));
    }
    decision.notes = {kinds, weights};
    if (report.weights_renormalized) decision.notes.push_back("weights were rescaled to sum to 1");
    out.tables.push_back(std::move(decision));

    out.tables.push_back(matrix_table("Normalized decision matrix", report.normalized.values, p, rounding));
    out.tables.push_back(
        matrix_table("Weighted normalized decision matrix", report.weighted.values, p, rounding));

    Table ideals;
    ideals.title = "Ideal solutions";
    ideals.corner = "Ideal";
    for (const auto& c : p.criteria) ideals.column_labels.push_back(c.name);
    ideals.row_labels = {"PIS (A+)", "NIS (A-)"};
    for (const auto* vec : {&report.ideals.pis, &report.ideals.nis}) {
        std::vector<std::string> row;
        for (double v : *vec) row.push_back(format_fixed(v, rounding));
        ideals.cells.push_back(std::move(row));
    }
    ideals.notes = {fmt::format("ideal mode: {}", to_string(report.ideals.mode))};
    out.tables.push_back(std::move(ideals));

    Table sep;
    sep.title = "Separation measures";
    sep.corner = "Alternative";
    sep.column_labels = {"S+", "S-"};
    sep.row_labels = p.alternatives;
    for (std::size_t i = 0; i < p.alternatives.size(); ++i) {
        sep.cells.push_back({format_fixed(report.separations.s_plus[i], rounding),
                             format_fixed(report.separations.s_minus[i], rounding)});
    }
    sep.notes = {fmt::format("distance: {}", to_string(report.separations.distance))};
    out.tables.push_back(std::move(sep));

    Table close;
    close.title = "Closeness ratio";
    close.corner = "Alternative";
    close.column_labels = {"C", "Rank"};
    close.row_labels = p.alternatives;
    for (std::size_t i = 0; i < p.alternatives.size(); ++i) {
        close.cells.push_back({format_fixed(report.closeness[i], rounding), std::to_string(report.ranks[i])});
    }
    out.tables.push_back(std::move(close));
    return out;
}

ExplainReport explain(const DecisionProblem& problem, const EvaluateOptions& options,
                      DisplayRounding rounding) {
    return explain(evaluate(problem, options), rounding);
}

std::vector<double> rescaled_weights(const std::vector<double>& base, std::size_t index, double weight) {
    std::vector<double> out(base.size());
    double others = 0.0;
    for (std::size_t j = 0; j < base.size(); ++j)
        if (j != index) others += base[j];
    const double remaining = 1.0 - weight;
    for (std::size_t j = 0; j < base.size(); ++j) {
        if (j == index) {
            out[j] = weight;
        } else if (others > 0.0) {
            out[j] = base[j] * (remaining / others);
        } else {
            out[j] = remaining / static_cast<double>(base.size() - 1);
        }
    }
    return out;
}

std::vector<Crossover> find_crossovers(const std::vector<SweepPoint>& points) {
    std::vector<Crossover> out;
    const SweepPoint* prev = nullptr;
    for (const auto& pt : points) {
        if (pt.error) continue;
        if (prev) {
            const auto a = order_by_rank(prev->ranks).front();
            const auto b = order_by_rank(pt.ranks).front();
            if (a != b) out.push_back({prev->weight, pt.weight, a, b});
        }
        prev = &pt;
    }
    return out;
}

namespace detail {

SweepSetup prepare_sweep(const DecisionProblem& problem, std::string_view criterion, int steps) {
    if (steps < 2) {
        throw Error(ErrorCode::InvalidArgument, "steps", fmt::format("steps must be >= 2, got {}", steps));
    }
    const auto it = std::find_if(problem.criteria.begin(), problem.criteria.end(),
                                 [&](const Criterion& c) { return c.name == criterion; });
    if (it == problem.criteria.end()) {
        throw Error(ErrorCode::UnknownName, "criterion", fmt::format("no criterion named '{}'", criterion));
    }
    if (problem.criteria.size() < 2) {
        throw Error(ErrorCode::InvalidArgument, "criteria", "sweeping needs at least two criteria");
    }
    validate_problem(problem);

    SweepSetup setup;
    setup.index = static_cast<std::size_t>(it - problem.criteria.begin());
    setup.base_weights = weights_of(problem.criteria);
    for (int k = 0; k < steps; ++k) setup.grid.push_back(static_cast<double>(k) / (steps - 1));
    return setup;
}

SweepPoint sweep_point(const DecisionProblem& problem, const SweepSetup& setup, double weight,
                       const EvaluateOptions& options) {
    SweepPoint pt;
    pt.weight = weight;
    pt.weights = rescaled_weights(setup.base_weights, setup.index, weight);
    DecisionProblem variant = problem;
    for (std::size_t j = 0; j < variant.criteria.size(); ++j) variant.criteria[j].weight = pt.weights[j];
    try {
        auto report = evaluate(variant, options);
        pt.closeness = std::move(report.closeness);
        pt.ranks = std::move(report.ranks);
    } catch (const Error& e) {
        pt.error = e.violations().front();
    }
    return pt;
}

SweepResult sweep_header(const DecisionProblem& problem, const SweepSetup& setup,
                         const EvaluateOptions& options) {
    SweepResult r;
    r.criterion = problem.criteria[setup.index].name;
    r.criterion_index = setup.index;
    r.options = options;
    r.alternatives = problem.alternatives;
    return r;
}

TrialOutcome run_trial(const DecisionProblem& problem, const NoiseModel& noise, std::uint64_t seed,
                       std::int64_t trial, const EvaluateOptions& options) {
    DecisionProblem variant = problem;
    variant.scores = perturbed_scores(problem.scores, noise, seed, trial);
    try {
        return {evaluate(variant, options).ranks, false};
    } catch (const Error& e) {
        if (e.code() != ErrorCode::DegenerateProblem) throw;
        // every closeness is undefined; the tie rule gives input order
        std::vector<int> ranks(problem.alternatives.size());
        for (std::size_t i = 0; i < ranks.size(); ++i) ranks[i] = static_cast<int>(i) + 1;
        return {std::move(ranks), true};
    }
}

StabilityReport stability_header(const DecisionProblem& problem, const NoiseModel& noise,
                                 std::int64_t trials, std::uint64_t seed,
                                 const EvaluateOptions& options) {
    if (trials < 1) {
        throw Error(ErrorCode::InvalidArgument, "trials", fmt::format("trials must be >= 1, got {}", trials));
    }
    if (noise.magnitude < 0) {
        throw Error(ErrorCode::InvalidArgument, "noise.magnitude", "noise magnitude must be >= 0");
    }
    StabilityReport r;
    r.trials = trials;
    r.seed = seed;
    r.noise = noise;
    r.options = options;
    r.alternatives = problem.alternatives;
    validate_problem(problem, {options.auto_normalize_weights});
    r.baseline_ranks = run_trial(problem, NoiseModel{0}, seed, 0, options).ranks;
    const std::size_t n = problem.alternatives.size();
    r.frequency.assign(n, std::vector<std::int64_t>(n, 0));
    return r;
}

void pick_modal_ranking(StabilityReport& report) {
    const RankingCount* best = nullptr;
    for (const auto& rc : report.ranking_counts) {
        if (!best || rc.count > best->count || (rc.count == best->count && rc.first_trial < best->first_trial))
            best = &rc;
    }
    if (best) report.modal_ranking = best->ranks;
}

}  // namespace detail

std::string NoiseModel::descriptor() const {
    return fmt::format("uniform-integer-jitter(+-{}, clamp {}..{})", magnitude, 1, 9);
}

Matrix perturbed_scores(const Matrix& scores, const NoiseModel& noise, std::uint64_t seed,
                        std::int64_t trial) {
    constexpr double lo = 1.0;
    constexpr double hi = 9.0;
    Matrix out = scores;
    for (std::size_t i = 0; i < scores.rows(); ++i) {
        for (std::size_t j = 0; j < scores.cols(); ++j) {
            const auto cell = static_cast<std::uint64_t>(i * scores.cols() + j);
            const double s = scores(i, j);
            const int d = cell_jitter(seed, static_cast<std::uint64_t>(trial), cell, noise.magnitude);
            out(i, j) = std::clamp(s + d, std::min(s, lo), std::max(s, hi));
        }
    }
    return out;
}

SweepResult weight_sweep(const DecisionProblem& problem, std::string_view criterion, int steps,
                         const EvaluateOptions& options) {
    const auto setup = detail::prepare_sweep(problem, criterion, steps);
    auto result = detail::sweep_header(problem, setup, options);
    result.points.resize(setup.grid.size());

    const auto count = static_cast<std::int64_t>(setup.grid.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t k = 0; k < count; ++k) {
        const auto idx = static_cast<std::size_t>(k);
        result.points[idx] = detail::sweep_point(problem, setup, setup.grid[idx], options);
    }

    result.crossovers = find_crossovers(result.points);
    return result;
}

StabilityReport monte_carlo_stability(const DecisionProblem& problem, const NoiseModel& noise,
                                      std::int64_t trials, std::uint64_t seed,
                                      const EvaluateOptions& options) {
    auto report = detail::stability_header(problem, noise, trials, seed, options);

    // one slot per trial; merged in trial order below
    std::vector<detail::TrialOutcome> outcomes(static_cast<std::size_t>(trials));
#pragma omp parallel for schedule(static)
    for (std::int64_t t = 0; t < trials; ++t) {
        outcomes[static_cast<std::size_t>(t)] = detail::run_trial(problem, noise, seed, t, options);
    }

    std::map<std::vector<int>, RankingCount> counts;
    for (std::int64_t t = 0; t < trials; ++t) {
        auto& o = outcomes[static_cast<std::size_t>(t)];
        if (o.degenerate) ++report.degenerate_trials;
        for (std::size_t a = 0; a < o.ranks.size(); ++a)
            ++report.frequency[a][static_cast<std::size_t>(o.ranks[a] - 1)];
        auto [it, inserted] = counts.try_emplace(o.ranks, RankingCount{o.ranks, 0, t});
        ++it->second.count;
    }
    for (auto& [ranks, rc] : counts) report.ranking_counts.push_back(std::move(rc));
    detail::pick_modal_ranking(report);
    return report;
}

std::int64_t top_set_frequency(const StabilityReport& report, const std::vector<std::size_t>& members) {
    std::int64_t total = 0;
    const auto k = static_cast<int>(members.size());
    for (const auto& rc : report.ranking_counts) {
        const bool match = std::all_of(members.begin(), members.end(), [&](std::size_t a) {
            return a < rc.ranks.size() && rc.ranks[a] <= k;
        });
        if (match) total += rc.count;
    }
    return total;
}

std::vector<LeaveOneOutEntry> leave_one_out(const DecisionProblem& problem, const EvaluateOptions& options) {
    if (problem.criteria.size() < 2) {
        throw Error(ErrorCode::InvalidArgument, "criteria", "leave-one-out needs at least two criteria");
    }
    validate_problem(problem, {options.auto_normalize_weights});

    std::vector<LeaveOneOutEntry> out;
    const std::size_t n = problem.alternatives.size();
    const std::size_t m = problem.criteria.size();
    for (std::size_t drop = 0; drop < m; ++drop) {
        LeaveOneOutEntry entry;
        entry.criterion = problem.criteria[drop].name;

        DecisionProblem reduced;
        reduced.alternatives = problem.alternatives;
        reduced.scores = Matrix(n, m - 1);
        double kept = 0.0;
        for (std::size_t j = 0; j < m; ++j)
            if (j != drop) kept += problem.criteria[j].weight;
        for (std::size_t j = 0, col = 0; j < m; ++j) {
            if (j == drop) continue;
            Criterion c = problem.criteria[j];
            c.weight = kept > 0.0 ? c.weight / kept : 0.0;
            reduced.criteria.push_back(std::move(c));
            for (std::size_t i = 0; i < n; ++i) reduced.scores(i, col) = problem.scores(i, j);
            ++col;
        }

        if (!(kept > 0.0)) {
            entry.errors.push_back({ErrorCode::DegenerateProblem, "criteria",
                                    fmt::format("every remaining weight is zero after dropping '{}'",
                                                entry.criterion)});
        } else {
            try {
                entry.report = evaluate(reduced, options);
            } catch (const Error& e) {
                entry.errors = e.violations();
            }
        }
        out.push_back(std::move(entry));
    }
    return out;
}

}  // namespace idealrank
