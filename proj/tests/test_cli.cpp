#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "fixtures.hpp"
#include "idealrank/cli.hpp"

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "idealrank");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = idealrank::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return testing::source_path("fixtures/" + name); }

std::string temp_file(const std::string& name, const std::string& contents) {
    const std::string path = "/tmp/idealrank_test_" + name;
    std::ofstream(path) << contents;
    return path;
}

}  // namespace

TEST_CASE("validate on the case study") {
    const auto r = run({"validate", fixture("paper-case")});
    CHECK(r.code == 0);
    CHECK(r.out == "valid\n");
    CHECK(r.err.empty());
}

TEST_CASE("rank with a bad weight sum exits 1 with a diagnostic") {
    const auto path = temp_file("weights.csv", "alternative,C1,C2\nkind,benefit,cost\nweight,1,1\nA1,3,4\nA2,5,6\n");
    const auto r = run({"rank", path});
    CHECK(r.code == 1);
    CHECK(r.out.empty());
    CHECK(r.err.find("WeightSumViolation") != std::string::npos);
    CHECK(run({"validate", path}).code == 1);
    CHECK(run({"rank", "--auto-normalize", path}).code == 0);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"rank"}).code == 2);
    CHECK(run({"rank", "--ideal-mode", "sideways", fixture("paper-case")}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"sweep", fixture("paper-case")}).code == 2);
    CHECK(run({"sweep", "--criterion", "C1", "--steps", "1", fixture("paper-case")}).code == 2);
}

TEST_CASE("missing input file is an input error") {
    const auto r = run({"rank", "/nonexistent/problem.json"});
    CHECK(r.code == 1);
    CHECK(r.err.find("cannot open") != std::string::npos);
}

TEST_CASE("rank all-benefit table shows the weighted matrix at the chosen rounding") {
    const auto r = run({"rank", "--ideal-mode", "all-benefit", "--rounding", "up", fixture("paper-case")});
    CHECK(r.code == 0);
    CHECK(r.out.find("A4           0.2269  0.0415  0.1461  0.0397") != std::string::npos);
    CHECK(r.out == run({"rank", "--ideal-mode", "all-benefit", "--rounding", "up", fixture("paper-case")}).out);
}

TEST_CASE("object and delimited formats") {
    const auto obj = run({"rank", "--format", "object", fixture("paper-case")});
    CHECK(obj.code == 0);
    const auto doc = nlohmann::json::parse(obj.out);
    CHECK(doc.at("ranks").get<std::vector<int>>() == std::vector<int>{3, 2, 5, 1, 6, 4});

    const auto del = run({"rank", "--format", "delimited", fixture("paper-case.csv")});
    CHECK(del.out.rfind("alternative,s_plus,s_minus,closeness,rank\n", 0) == 0);
}

TEST_CASE("environment variables override flag defaults") {
    ::setenv("IDEALRANK_IDEAL_MODE", "all-benefit", 1);
    const auto env = run({"rank", "--format", "object", fixture("paper-case")});
    ::unsetenv("IDEALRANK_IDEAL_MODE");
    const auto doc = nlohmann::json::parse(env.out);
    CHECK(doc.at("options").at("ideal_mode") == "all-benefit");
}

TEST_CASE("scoresheets replace the document's scores") {
    const auto template_path = temp_file("template.json", R"({
      "criteria": [{"name": "C1", "kind": "benefit", "weight": 0.5}, {"name": "C2", "kind": "benefit", "weight": 0.1},
                   {"name": "C3", "kind": "benefit", "weight": 0.3}, {"name": "C4", "kind": "cost", "weight": 0.1}],
      "alternatives": ["A1", "A2", "A3", "A4", "A5", "A6"]})");
    const auto sheets = fixture("paper-case-scoresheets.csv");
    const auto a = run({"rank", "--format", "object", "--scoresheets", sheets, "--aggregate", "mean", template_path});
    const auto b = run({"rank", "--format", "object", fixture("paper-case")});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(run({"rank", template_path}).code == 1);
    CHECK(run({"rank", "--scoresheets", sheets, "--aggregate", "median", template_path}).code == 0);
}

TEST_CASE("sweep and stability commands") {
    const auto sweep = run({"sweep", "--criterion", "C1", "--steps", "5", fixture("paper-case")});
    CHECK(sweep.code == 0);
    CHECK(sweep.out.find("Weight sweep on C1") != std::string::npos);
    CHECK(run({"sweep", "--criterion", "C7", fixture("paper-case")}).code == 1);

    const auto s1 = run({"stability", "--trials", "300", "--seed", "7", "--format", "object", fixture("paper-case")});
    const auto s2 = run({"stability", "--trials", "300", "--seed", "7", "--format", "object", fixture("paper-case")});
    CHECK(s1.code == 0);
    CHECK(s1.out == s2.out);
    CHECK(nlohmann::json::parse(s1.out).at("trials") == 300);
}

TEST_CASE("explain via the CLI") {
    const auto r = run({"explain", "--ideal-mode", "all-benefit", fixture("paper-case")});
    CHECK(r.code == 0);
    CHECK(r.out.find("Separation measures") != std::string::npos);
    CHECK(run({"explain", "--format", "object", fixture("paper-case")}).code == 0);
    CHECK(run({"explain", "--format", "delimited", fixture("paper-case")}).out.find("# Closeness ratio") != std::string::npos);
}
