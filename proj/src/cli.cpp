#include "idealrank/cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fstream>
#include <iostream>
#include <sstream>

#include "idealrank/analysis.hpp"
#include "idealrank/ingestion.hpp"
#include "idealrank/render.hpp"
#include "idealrank/report_json.hpp"
#include "idealrank/service.hpp"

namespace idealrank::cli {

namespace {

enum class OutputFormat { Table, Object, Delimited };

struct Config {
    std::string input;
    std::string ideal_mode = "honor-kinds";
    std::string distance = "euclidean";
    std::string format = "table";
    std::string rounding = "nearest";
    bool auto_normalize = false;
    std::string scoresheets;
    std::string aggregate = "mean";
    std::string criterion;
    int steps = 11;
    std::int64_t trials = 1000;
    std::uint64_t seed = 0;
    int magnitude = 1;
    std::string host = "127.0.0.1";
    int port = 8080;
};

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::InvalidArgument, path, "cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

OutputFormat output_format(const std::string& s) {
    if (s == "object") return OutputFormat::Object;
    if (s == "delimited") return OutputFormat::Delimited;
    return OutputFormat::Table;
}

EvaluateOptions evaluate_options(const Config& cfg) {
    EvaluateOptions o;
    o.ideal_mode = parse_ideal_mode(cfg.ideal_mode);
    o.distance = parse_distance_mode(cfg.distance);
    o.auto_normalize_weights = cfg.auto_normalize;
    return o;
}

DecisionProblem load_problem(const Config& cfg) {
    const std::string bytes = read_file(cfg.input);
    const bool from_sheets = !cfg.scoresheets.empty();
    DecisionProblem problem = parse_problem(bytes, ParseOptions{from_sheets});
    if (from_sheets) {
        const auto sheets = parse_scoresheets(read_file(cfg.scoresheets));
        problem = aggregate(sheets, parse_aggregate_method(cfg.aggregate), problem.criteria,
                            problem.alternatives);
    }
    return problem;
}

void add_problem_options(CLI::App* cmd, Config& cfg) {
    cmd->add_option("input", cfg.input, "Problem document (structured object or delimited table), '-' for stdin")
        ->required();
    cmd->add_option("--scoresheets", cfg.scoresheets, "Respondent scoresheets replacing the document's scores")
        ->envname("IDEALRANK_SCORESHEETS");
    cmd->add_option("--aggregate", cfg.aggregate, "How respondents are combined")
        ->check(CLI::IsMember({"mean", "median"}))
        ->envname("IDEALRANK_AGGREGATE");
}

void add_eval_options(CLI::App* cmd, Config& cfg) {
    cmd->add_option("--ideal-mode", cfg.ideal_mode, "honor-kinds | all-benefit")
        ->check(CLI::IsMember({"honor-kinds", "all-benefit"}))
        ->envname("IDEALRANK_IDEAL_MODE");
    cmd->add_option("--distance", cfg.distance, "euclidean | squared")
        ->check(CLI::IsMember({"euclidean", "squared"}))
        ->envname("IDEALRANK_DISTANCE");
    cmd->add_option("--format", cfg.format, "table | object | delimited")
        ->check(CLI::IsMember({"table", "object", "delimited"}))
        ->envname("IDEALRANK_FORMAT");
    cmd->add_option("--rounding", cfg.rounding, "4-dp display rounding: nearest | up")
        ->check(CLI::IsMember({"nearest", "up"}))
        ->envname("IDEALRANK_ROUNDING");
    cmd->add_flag("--auto-normalize", cfg.auto_normalize, "Rescale weights that do not sum to 1")
        ->envname("IDEALRANK_AUTO_NORMALIZE");
}

int run_rank(const Config& cfg, std::ostream& out) {
    const auto report = evaluate(load_problem(cfg), evaluate_options(cfg));
    const auto rounding = parse_display_rounding(cfg.rounding);
    switch (output_format(cfg.format)) {
        case OutputFormat::Table: out << render_table(report, rounding); break;
        case OutputFormat::Object: out << to_json(report, true).dump(2) << "\n"; break;
        case OutputFormat::Delimited: out << render_delimited(report); break;
    }
    return kExitOk;
}

int run_explain(const Config& cfg, std::ostream& out) {
    const auto report = explain(load_problem(cfg), evaluate_options(cfg), parse_display_rounding(cfg.rounding));
    switch (output_format(cfg.format)) {
        case OutputFormat::Table: out << render_table(report); break;
        case OutputFormat::Object: out << to_json(report).dump(2) << "\n"; break;
        case OutputFormat::Delimited: out << render_delimited(report); break;
    }
    return kExitOk;
}

int run_sweep(const Config& cfg, std::ostream& out) {
    const auto sweep = weight_sweep(load_problem(cfg), cfg.criterion, cfg.steps, evaluate_options(cfg));
    switch (output_format(cfg.format)) {
        case OutputFormat::Table: out << render_table(sweep, parse_display_rounding(cfg.rounding)); break;
        case OutputFormat::Object: out << to_json(sweep).dump(2) << "\n"; break;
        case OutputFormat::Delimited: out << render_delimited(sweep); break;
    }
    return kExitOk;
}

int run_stability(const Config& cfg, std::ostream& out) {
    const auto report = monte_carlo_stability(load_problem(cfg), NoiseModel{cfg.magnitude}, cfg.trials,
                                              cfg.seed, evaluate_options(cfg));
    switch (output_format(cfg.format)) {
        case OutputFormat::Table: out << render_table(report); break;
        case OutputFormat::Object: out << to_json(report).dump(2) << "\n"; break;
        case OutputFormat::Delimited: out << render_delimited(report); break;
    }
    return kExitOk;
}

int run_validate(const Config& cfg, std::ostream& out, std::ostream& err) {
    const auto problem = load_problem(cfg);
    const auto violations = check_problem(problem, {cfg.auto_normalize});
    if (!violations.empty()) throw Error(violations);
    if (output_format(cfg.format) == OutputFormat::Object) {
        out << nlohmann::json{{"valid", true}, {"violations", nlohmann::json::array()}}.dump(2) << "\n";
    } else {
        out << "valid\n";
    }
    (void)err;
    return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Config cfg;
    CLI::App app{"Rank alternatives by closeness to the ideal solution", "idealrank"};
    app.require_subcommand(1);

    auto* rank = app.add_subcommand("rank", "Rank the alternatives of a problem");
    add_problem_options(rank, cfg);
    add_eval_options(rank, cfg);

    auto* expl = app.add_subcommand("explain", "Print every intermediate table");
    add_problem_options(expl, cfg);
    add_eval_options(expl, cfg);

    auto* sweep = app.add_subcommand("sweep", "Sweep one criterion's weight from 0 to 1");
    add_problem_options(sweep, cfg);
    add_eval_options(sweep, cfg);
    sweep->add_option("--criterion", cfg.criterion, "Criterion to sweep")->required();
    sweep->add_option("--steps", cfg.steps, "Grid points, >= 2")->check(CLI::Range(2, 1000000))
        ->envname("IDEALRANK_STEPS");

    auto* stab = app.add_subcommand("stability", "Monte Carlo rank stability under score jitter");
    add_problem_options(stab, cfg);
    add_eval_options(stab, cfg);
    stab->add_option("--trials", cfg.trials, "Number of trials")->check(CLI::PositiveNumber)
        ->envname("IDEALRANK_TRIALS");
    stab->add_option("--seed", cfg.seed, "Seed of the perturbation stream")->envname("IDEALRANK_SEED");
    stab->add_option("--magnitude", cfg.magnitude, "Integer jitter magnitude")->check(CLI::NonNegativeNumber)
        ->envname("IDEALRANK_MAGNITUDE");

    auto* validate = app.add_subcommand("validate", "Check a problem document");
    add_problem_options(validate, cfg);
    validate->add_option("--format", cfg.format)->check(CLI::IsMember({"table", "object", "delimited"}))
        ->envname("IDEALRANK_FORMAT");
    validate->add_flag("--auto-normalize", cfg.auto_normalize)->envname("IDEALRANK_AUTO_NORMALIZE");

    auto* serve = app.add_subcommand("serve", "Run the HTTP service");
    serve->add_option("--port", cfg.port, "TCP port")->check(CLI::Range(1, 65535))->envname("IDEALRANK_PORT");
    serve->add_option("--host", cfg.host, "Bind address")->envname("IDEALRANK_HOST");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << "run 'idealrank --help' for usage\n";
        return kExitUsage;
    }

    try {
        if (rank->parsed()) return run_rank(cfg, out);
        if (expl->parsed()) return run_explain(cfg, out);
        if (sweep->parsed()) return run_sweep(cfg, out);
        if (stab->parsed()) return run_stability(cfg, out);
        if (validate->parsed()) return run_validate(cfg, out, err);
        if (serve->parsed()) {
            if (!service::serve(cfg.host, cfg.port)) {
                err << fmt::format("error: cannot listen on {}:{}\n", cfg.host, cfg.port);
                return kExitInputError;
            }
            return kExitOk;
        }
    } catch (const Error& e) {
        for (const auto& v : e.violations()) {
            err << "error: " << to_string(v.code);
            if (!v.path.empty()) err << " at " << v.path;
            err << ": " << v.message << "\n";
        }
        return kExitInputError;
    }
    return kExitUsage;
}

}  // namespace idealrank::cli
