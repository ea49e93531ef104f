#include "idealrank/report_json.hpp"

#include "idealrank/ingestion.hpp"

namespace idealrank {

using nlohmann::json;

namespace {

json matrix_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const auto r = m.row(i);
        rows.push_back(json(std::vector<double>(r.begin(), r.end())));
    }
    return rows;
}

json table_json(const Table& t) {
    return {{"title", t.title},   {"corner", t.corner}, {"columns", t.column_labels},
            {"rows", t.row_labels}, {"cells", t.cells}, {"notes", t.notes}};
}

}  // namespace

json options_to_json(const EvaluateOptions& options) {
    return {{"ideal_mode", to_string(options.ideal_mode)},
            {"distance", to_string(options.distance)},
            {"auto_normalize_weights", options.auto_normalize_weights}};
}

json violations_to_json(const std::vector<Violation>& violations) {
    json out = json::array();
    for (const auto& v : violations) {
        out.push_back({{"code", to_string(v.code)}, {"path", v.path}, {"message", v.message}});
    }
    return out;
}

json to_json(const RankingReport& report, bool include_intermediates) {
    json out = {{"alternatives", report.problem.alternatives},
                {"closeness", report.closeness},
                {"ranks", report.ranks},
                {"options", options_to_json(report.options)},
                {"weights_renormalized", report.weights_renormalized},
                {"version", kEngineVersion}};
    if (include_intermediates) {
        out["intermediates"] = {
            {"problem", problem_to_json(report.problem)},
            {"normalized", matrix_json(report.normalized.values)},
            {"weighted", matrix_json(report.weighted.values)},
            {"ideals", {{"pis", report.ideals.pis}, {"nis", report.ideals.nis}, {"mode", to_string(report.ideals.mode)}}},
            {"separations",
             {{"s_plus", report.separations.s_plus},
              {"s_minus", report.separations.s_minus},
              {"distance", to_string(report.separations.distance)}}},
        };
    }
    return out;
}

json to_json(const ExplainReport& report) {
    json tables = json::array();
    for (const auto& t : report.tables) tables.push_back(table_json(t));
    return {{"tables", std::move(tables)},
            {"options", options_to_json(report.options)},
            {"rounding", to_string(report.rounding)},
            {"weights_renormalized", report.weights_renormalized},
            {"version", kEngineVersion}};
}

json to_json(const SweepResult& sweep) {
    json points = json::array();
    for (const auto& pt : sweep.points) {
        json p = {{"weight", pt.weight}, {"weights", pt.weights}};
        if (pt.error) {
            p["error"] = violations_to_json({*pt.error}).front();
        } else {
            p["closeness"] = pt.closeness;
            p["ranks"] = pt.ranks;
        }
        points.push_back(std::move(p));
    }
    json crossovers = json::array();
    for (const auto& c : sweep.crossovers) {
        crossovers.push_back({{"weight_low", c.weight_low},
                              {"weight_high", c.weight_high},
                              {"from", sweep.alternatives[c.from]},
                              {"to", sweep.alternatives[c.to]}});
    }
    return {{"criterion", sweep.criterion},
            {"alternatives", sweep.alternatives},
            {"options", options_to_json(sweep.options)},
            {"points", std::move(points)},
            {"crossovers", std::move(crossovers)},
            {"version", kEngineVersion}};
}

json to_json(const StabilityReport& report) {
    json counts = json::array();
    for (const auto& rc : report.ranking_counts) {
        counts.push_back({{"ranks", rc.ranks}, {"count", rc.count}, {"first_trial", rc.first_trial}});
    }
    return {{"trials", report.trials},
            {"seed", report.seed},
            {"noise", {{"kind", "uniform-integer-jitter"}, {"magnitude", report.noise.magnitude}, {"clamp", {1, 9}}}},
            {"options", options_to_json(report.options)},
            {"alternatives", report.alternatives},
            {"baseline_ranks", report.baseline_ranks},
            {"frequency", report.frequency},
            {"ranking_counts", std::move(counts)},
            {"modal_ranking", report.modal_ranking},
            {"degenerate_trials", report.degenerate_trials},
            {"version", kEngineVersion}};
}

json to_json(const std::vector<LeaveOneOutEntry>& entries) {
    json out = json::array();
    for (const auto& e : entries) {
        json item = {{"criterion", e.criterion}};
        if (e.report) {
            item["report"] = to_json(*e.report, false);
        } else {
            item["violations"] = violations_to_json(e.errors);
        }
        out.push_back(std::move(item));
    }
    return out;
}

}  // namespace idealrank
