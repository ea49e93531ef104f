// Acceptance suite: one line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fmt/format.h>
#include <fstream>
#include <functional>
#include <set>
#include <sys/wait.h>

#include "fixtures.hpp"
#include "idealrank/analysis.hpp"
#include "idealrank/ingestion.hpp"
#include "idealrank/report_json.hpp"
#include "naive_topsis.hpp"
#include "properties.hpp"

using namespace idealrank;

namespace {

struct Verdict {
    bool ok = true;
    std::vector<std::string> notes;

    void require(bool cond, std::string what) {
        if (!cond) {
            ok = false;
            notes.push_back("FAILED: " + std::move(what));
        }
    }
    void note(std::string what) { notes.push_back(std::move(what)); }
};

// Published weighted normalized matrix and ideal tuples of the case study.
const std::vector<std::vector<std::string>> kPublishedWeighted{
    {"0.1985", "0.0356", "0.1279", "0.0463"}, {"0.2269", "0.0474", "0.1279", "0.0397"},
    {"0.1985", "0.0356", "0.1096", "0.0397"}, {"0.2269", "0.0415", "0.1461", "0.0397"},
    {"0.1702", "0.0356", "0.1096", "0.0397"}, {"0.1985", "0.0474", "0.1096", "0.0397"}};
const std::vector<std::string> kPis{"0.2269", "0.0474", "0.1461", "0.0463"};
const std::vector<std::string> kNis{"0.1702", "0.0356", "0.1096", "0.0397"};

// Published closeness column and the two published orderings (the rank column
// and the final list), as alternative indices best first.
const std::vector<double> kPublishedCloseness{0.492824578, 0.850943262, 0.266585065, 0.729255514, 0.269528495, 0.497990187};
const std::vector<std::size_t> kPublishedRankOrder{1, 3, 5, 0, 4, 2};
const std::vector<std::size_t> kPublishedListOrder{1, 3, 0, 5, 4, 2};

DecisionProblem fixture_problem() {
    return parse_problem(testing::slurp(testing::source_path("fixtures/paper-case")));
}

struct Proc {
    int code;
    std::string out;
    std::string err;
};

Proc run_tool(const std::string& args) {
    const std::string out_path = "/tmp/idealrank_acceptance.out";
    const std::string err_path = "/tmp/idealrank_acceptance.err";
    const std::string cmd = fmt::format("cd '{}' && '{}' {} >'{}' 2>'{}'", IDEALRANK_SOURCE_DIR, IDEALRANK_TOOL_PATH,
                                        args, out_path, err_path);
    const int status = std::system(cmd.c_str());
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, testing::slurp(out_path), testing::slurp(err_path)};
}

Verdict weighted_matrix_reproduction() {
    Verdict v;
    const auto r = evaluate(fixture_problem(), {IdealMode::AllBenefit});
    int up = 0, nearest = 0;
    double worst = 0;
    for (std::size_t i = 0; i < 6; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            const double x = r.weighted.values(i, j);
            up += format_fixed(x, DisplayRounding::Up) == kPublishedWeighted[i][j];
            nearest += format_fixed(x, DisplayRounding::Nearest) == kPublishedWeighted[i][j];
            worst = std::max(worst, std::abs(x - std::stod(kPublishedWeighted[i][j])));
        }
    }
    v.require(up == 24, fmt::format("{}/24 cells equal at 4 dp (rounding up)", up));
    v.require(worst < 1e-4, fmt::format("max |V - published| = {:.2e}", worst));
    v.note(fmt::format("24/24 cells equal under upward 4-dp rounding; {}/24 under round-to-nearest; max |V - published| = {:.2e}",
                       nearest, worst));
    v.require(format_fixed(r.weighted.values(0, 0), DisplayRounding::Up) == "0.1985", "V11");
    v.require(format_fixed(r.weighted.values(3, 2), DisplayRounding::Up) == "0.1461", "V43");
    v.require(format_fixed(r.weighted.values(4, 0), DisplayRounding::Up) == "0.1702", "V51");
    return v;
}

Verdict ideal_reproduction() {
    Verdict v;
    const auto r = evaluate(fixture_problem(), {IdealMode::AllBenefit});
    for (std::size_t j = 0; j < 4; ++j) {
        v.require(format_fixed(r.ideals.pis[j], DisplayRounding::Up) == kPis[j], fmt::format("A+ component {}", j + 1));
        v.require(format_fixed(r.ideals.nis[j], DisplayRounding::Up) == kNis[j], fmt::format("A- component {}", j + 1));
        v.require(std::abs(r.ideals.pis[j] - std::stod(kPis[j])) < 1e-4, "A+ within 1e-4");
        v.require(std::abs(r.ideals.nis[j] - std::stod(kNis[j])) < 1e-4, "A- within 1e-4");
    }
    v.note("A+ = (0.2269, 0.0474, 0.1461, 0.0463), A- = (0.1702, 0.0356, 0.1096, 0.0397)");
    return v;
}

Verdict cost_handling() {
    Verdict v;
    const auto ab = evaluate(fixture_problem(), {IdealMode::AllBenefit}).ideals;
    const auto hk = evaluate(fixture_problem(), {IdealMode::HonorKinds}).ideals;
    for (std::size_t j = 0; j < 3; ++j) {
        v.require(ab.pis[j] == hk.pis[j] && ab.nis[j] == hk.nis[j], fmt::format("C{} unchanged", j + 1));
    }
    v.require(hk.pis[3] == ab.nis[3] && hk.nis[3] == ab.pis[3], "C4 components swap");
    v.require(format_fixed(hk.pis[3], DisplayRounding::Up) == "0.0397", "pis4 = 0.0397");
    v.require(format_fixed(hk.nis[3], DisplayRounding::Up) == "0.0463", "nis4 = 0.0463");
    return v;
}

Verdict discrepancy_documentation() {
    Verdict v;
    const auto problem = fixture_problem();
    const auto golden = testing::golden();
    std::vector<std::vector<double>> scores;
    for (std::size_t i = 0; i < 6; ++i) scores.emplace_back(problem.scores.row(i).begin(), problem.scores.row(i).end());
    const auto weights = weights_of(problem.criteria);

    for (auto mode : {IdealMode::AllBenefit, IdealMode::HonorKinds}) {
        for (auto dist : {DistanceMode::Euclidean, DistanceMode::Squared}) {
            const std::string key = fmt::format("{}/{}", to_string(mode), to_string(dist));
            const auto oracle = naive::topsis(scores, weights, {false, false, false, true},
                                              mode == IdealMode::HonorKinds, dist == DistanceMode::Squared);
            const auto& frozen = golden.at(key);
            const auto engine = evaluate(problem, {mode, dist});

            double max_published = 0, max_engine = 0;
            for (std::size_t i = 0; i < 6; ++i) {
                max_published = std::max(max_published, std::abs(oracle.closeness[i] - kPublishedCloseness[i]));
                max_engine = std::max(max_engine, std::abs(engine.closeness[i] - frozen.at("closeness")[i].get<double>()));
                max_engine = std::max(max_engine, std::abs(engine.closeness[i] - oracle.closeness[i]));
            }
            std::vector<int> ranks(oracle.ranks);
            const auto order = order_by_rank(ranks);
            v.require(max_published > 1e-3, key + ": published closeness unexpectedly reproduced");
            v.require(order != kPublishedRankOrder, key + ": published rank column unexpectedly reproduced");
            v.require(order != kPublishedListOrder, key + ": published final list unexpectedly reproduced");
            v.require(max_engine <= 1e-9, fmt::format("{}: engine vs golden/oracle {:.2e}", key, max_engine));
            v.require(engine.ranks == frozen.at("ranks").get<std::vector<int>>(), key + ": ranks vs golden");

            const std::set<std::size_t> top2{order[0], order[1]};
            v.require(top2 == std::set<std::size_t>{1, 3}, key + ": top-2 set is not {A2, A4}");
            v.note(fmt::format("{}: max |C - published| = {:.4f}; order {}", key, max_published,
                               fmt::join(std::vector<std::string>{problem.alternatives[order[0]], problem.alternatives[order[1]],
                                                                  problem.alternatives[order[2]], problem.alternatives[order[3]],
                                                                  problem.alternatives[order[4]], problem.alternatives[order[5]]},
                                         " > ")));
        }
    }
    return v;
}

Verdict property_suite() {
    Verdict v;
    const std::vector<std::pair<std::string, std::function<props::Outcome()>>> checks{
        {"unit-norm columns", [] { return props::unit_norm_columns(1000, 101); }},
        {"closeness in [0,1]", [] { return props::closeness_bounds(1000, 102); }},
        {"column scaling k in {0.001, 1, 1000}", [] { return props::column_scaling_invariance(1000, 103); }},
        {"duplicate alternatives", [] { return props::duplicate_alternatives(1000, 104); }},
        {"permutation equivariance", [] { return props::permutation_equivariance(1000, 105); }},
        {"mode equivalence on all-benefit problems", [] { return props::mode_equivalence(1000, 106); }},
        {"oracle equivalence (1000 problems, 1e-9)", [] { return props::oracle_equivalence(1000, 107); }},
    };
    for (const auto& [name, fn] : checks) {
        const auto o = fn();
        v.require(o.ok, name + ": " + o.detail);
        v.note(fmt::format("{}: {} ({} checks)", name, o.ok ? "ok" : "failed", o.checked));
    }
    return v;
}

Verdict sensitivity_sanity() {
    Verdict v;
    const auto problem = fixture_problem();
    const auto sweep = weight_sweep(problem, "C1", 101, {});
    const auto& end = sweep.points.back();
    v.require(end.weight == 1.0 && !end.error, "sweep endpoint at w(C1) = 1");
    if (!end.error) {
        v.require(end.closeness[1] == 1.0 && end.closeness[3] == 1.0, "A2 and A4 at closeness 1");
        v.require(end.closeness[4] == 0.0, "A5 at closeness 0");
        // ranking follows raw C1 scores, ties in input order
        const auto by_c1 = rank(problem.scores.column(0));
        v.require(end.ranks == by_c1, "endpoint ranking equals ranking by raw C1 scores");
    }

    const auto start = std::chrono::steady_clock::now();
    const auto baseline = evaluate(problem).ranks;
    const auto still = monte_carlo_stability(problem, {0}, 10000, 42);
    v.require(still.modal_ranking == baseline && still.ranking_counts.size() == 1 &&
                  still.ranking_counts[0].count == 10000,
              "zero noise gives the baseline ranking in 100% of trials");

    const auto a = monte_carlo_stability(problem, {1}, 10000, 42);
    const auto b = monte_carlo_stability(problem, {1}, 10000, 42);
    v.require(to_json(a).dump() == to_json(b).dump(), "fixed-seed reports byte-identical in process");
    const auto seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    v.require(seconds < 60.0, fmt::format("10,000-trial runs took {:.1f} s", seconds));

    const auto golden = testing::golden().at("stability/honor-kinds/seed42/10000/top2-A2-A4").get<std::int64_t>();
    v.require(top_set_frequency(a, {1, 3}) == golden, "top-2 {A2, A4} frequency equals oracle golden");

    const auto p1 = run_tool("stability --trials 10000 --seed 42 --format object fixtures/paper-case");
    const auto p2 = run_tool("stability --trials 10000 --seed 42 --format object fixtures/paper-case");
    v.require(p1.code == 0 && p1.out == p2.out && !p1.out.empty(), "fixed-seed CLI runs byte-identical across two processes");
    v.note(fmt::format("top-2 {{A2, A4}} in {}/10000 jittered trials; three runs of 10,000 trials in {:.2f} s", golden, seconds));
    return v;
}

Verdict roundtrip_and_cli() {
    Verdict v;
    for (const char* name : {"fixtures/paper-case", "fixtures/paper-case.csv"}) {
        const auto p = parse_problem(testing::slurp(testing::source_path(name)));
        for (auto fmt_kind : {ProblemFormat::StructuredObject, ProblemFormat::DelimitedTable}) {
            v.require(parse_problem(serialize_problem(p, fmt_kind), fmt_kind) == p,
                      fmt::format("{} parse -> serialize -> parse", name));
        }
    }

    for (const std::string cmd : {"rank fixtures/paper-case", "rank --ideal-mode all-benefit fixtures/paper-case",
                                  "explain fixtures/paper-case", "explain --format object fixtures/paper-case",
                                  "rank --format delimited fixtures/paper-case.csv"}) {
        const auto a = run_tool(cmd);
        const auto b = run_tool(cmd);
        v.require(a.code == 0, cmd + ": exit 0");
        v.require(a.err.empty(), cmd + ": nothing on the error stream");
        v.require(a.out == b.out && !a.out.empty(), cmd + ": byte-stable output");
    }

    const auto table = run_tool("rank --ideal-mode all-benefit --rounding up fixtures/paper-case");
    for (std::size_t i = 0; i < 6; ++i) {
        const std::string row = fmt::format("A{}           {}", i + 1, fmt::join(kPublishedWeighted[i], "  "));
        v.require(table.out.find(row) != std::string::npos, "rank table weighted row " + row);
    }

    const auto valid = run_tool("validate fixtures/paper-case");
    v.require(valid.code == 0 && valid.out == "valid\n" && valid.err.empty(), "validate: exit 0, 'valid'");

    {
        std::ofstream("/tmp/idealrank_weight_sum_2.csv") << "alternative,C1,C2,C3,C4\nkind,benefit,benefit,benefit,cost\n"
                                                            "weight,0.5,0.5,0.5,0.5\nA1,7,6,7,7\nA2,8,8,7,6\n";
    }
    const auto bad = run_tool("rank /tmp/idealrank_weight_sum_2.csv");
    v.require(bad.code == 1, "rank with weight sum 2: exit 1");
    v.require(bad.err.find("WeightSumViolation") != std::string::npos, "rank with weight sum 2: WeightSumViolation message");
    v.require(bad.out.empty(), "rank with weight sum 2: nothing on stdout");
    v.require(run_tool("validate /tmp/idealrank_weight_sum_2.csv").code == 1, "validate with weight sum 2: exit 1");
    v.require(run_tool("rank --distance manhattan fixtures/paper-case").code == 2, "usage error: exit 2");
    v.require(run_tool("explain").code == 2, "missing input: exit 2");
    return v;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"AC1 weighted normalized matrix matches the published values at 4 dp", weighted_matrix_reproduction},
        {"AC2 ideal solutions match the published tuples at 4 dp", ideal_reproduction},
        {"AC3 honor-kinds differs from all-benefit only by the swapped C4 components", cost_handling},
        {"AC4 published closeness/ordering not reproducible; engine matches oracle goldens; top-2 {A2, A4}",
         discrepancy_documentation},
        {"AC5 property suite", property_suite},
        {"AC6 sensitivity sanity", sensitivity_sanity},
        {"AC7 round-trip and CLI", roundtrip_and_cli},
    };

    int failed = 0;
    for (const auto& [title, fn] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = fn();
        } catch (const std::exception& e) {
            v.ok = false;
            v.notes.push_back(std::string("FAILED: exception: ") + e.what());
        }
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] %s (%.0f ms)\n", v.ok ? "PASS" : "FAIL", title.c_str(), ms);
        for (const auto& n : v.notes) std::printf("       %s\n", n.c_str());
        failed += v.ok ? 0 : 1;
    }
    std::printf("%d/%zu acceptance criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
