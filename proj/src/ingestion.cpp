#include "idealrank/ingestion.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fmt/format.h>
#include <map>
#include <set>

#include "csv.hpp"
#include "idealrank/topsis.hpp"

namespace idealrank {

using nlohmann::json;

namespace {

void require_utf8(std::string_view bytes) {
    std::size_t i = 0;
    while (i < bytes.size()) {
        const auto c = static_cast<unsigned char>(bytes[i]);
        std::size_t len = c < 0x80 ? 1 : (c >> 5) == 0x6 ? 2 : (c >> 4) == 0xE ? 3 : (c >> 3) == 0x1E ? 4 : 0;
        if (len == 0 || i + len > bytes.size()) {
            throw Error(ErrorCode::SyntaxError, fmt::format("byte {}", i), "input is not valid UTF-8");
        }
        for (std::size_t k = 1; k < len; ++k) {
            if ((static_cast<unsigned char>(bytes[i + k]) >> 6) != 0x2) {
                throw Error(ErrorCode::SyntaxError, fmt::format("byte {}", i + k),
                            "input is not valid UTF-8");
            }
        }
        i += len;
    }
}

bool is_blank(std::string_view bytes) {
    return bytes.find_first_not_of(" \t\r\n") == std::string_view::npos;
}

[[noreturn]] void schema_error(std::string path, std::string message) {
    throw Error(ErrorCode::SchemaError, std::move(path), std::move(message));
}

const json& require_field(const json& obj, const char* key, const std::string& path) {
    const auto it = obj.find(key);
    if (it == obj.end()) schema_error(path, fmt::format("missing field '{}'", key));
    return *it;
}

std::string require_string(const json& value, const std::string& path) {
    if (!value.is_string()) schema_error(path, "expected a string");
    return value.get<std::string>();
}

double require_number(const json& value, const std::string& path) {
    if (!value.is_number()) schema_error(path, "expected a number");
    return value.get<double>();
}

const json& require_array(const json& value, const std::string& path) {
    if (!value.is_array()) schema_error(path, "expected an array");
    return value;
}

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t");
    return std::string(s.substr(b, e - b + 1));
}

bool parse_double(std::string_view text, double& out) {
    const std::string t = trim(text);
    if (t.empty()) return false;
    const char* first = t.data();
    if (*first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, t.data() + t.size(), out);
    return ec == std::errc{} && ptr == t.data() + t.size();
}

DecisionProblem parse_delimited(std::string_view bytes, const ParseOptions& options) {
    const auto rows = csv::read(bytes);
    if (rows.size() < 3) {
        throw Error(ErrorCode::SyntaxError, fmt::format("line {}", rows.empty() ? 1 : rows.back().line + 1),
                    "expected a header row, a kind row and a weight row");
    }
    const auto& header = rows[0].fields;
    const std::size_t m = header.size() - 1;
    if (m == 0) schema_error("line 1", "header declares no criteria");

    auto check_width = [&](const csv::Row& row) {
        if (row.fields.size() != header.size()) {
            schema_error(fmt::format("line {}", row.line),
                         fmt::format("expected {} fields, found {}", header.size(), row.fields.size()));
        }
    };

    const auto& kind_row = rows[1];
    const auto& weight_row = rows[2];
    check_width(kind_row);
    check_width(weight_row);
    if (trim(kind_row.fields[0]) != "kind") {
        schema_error(fmt::format("line {}", kind_row.line), "second row must start with 'kind'");
    }
    if (trim(weight_row.fields[0]) != "weight") {
        schema_error(fmt::format("line {}", weight_row.line), "third row must start with 'weight'");
    }

    DecisionProblem p;
    for (std::size_t j = 0; j < m; ++j) {
        Criterion c;
        c.name = trim(header[j + 1]);
        try {
            c.kind = parse_criterion_kind(trim(kind_row.fields[j + 1]));
        } catch (const Error& e) {
            schema_error(fmt::format("line {} field {}", kind_row.line, j + 2), e.violations().front().message);
        }
        if (!parse_double(weight_row.fields[j + 1], c.weight)) {
            schema_error(fmt::format("line {} field {}", weight_row.line, j + 2),
                         fmt::format("weight '{}' is not a number", weight_row.fields[j + 1]));
        }
        p.criteria.push_back(std::move(c));
    }

    const std::size_t n = rows.size() - 3;
    if (n == 0 && options.allow_missing_scores) return p;
    p.scores = Matrix(n, m);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& row = rows[i + 3];
        check_width(row);
        p.alternatives.push_back(trim(row.fields[0]));
        for (std::size_t j = 0; j < m; ++j) {
            if (!parse_double(row.fields[j + 1], p.scores(i, j))) {
                schema_error(fmt::format("line {} field {}", row.line, j + 2),
                             fmt::format("score '{}' is not a number", row.fields[j + 1]));
            }
        }
    }
    return p;
}

}  // namespace

ProblemFormat detect_format(std::string_view bytes) {
    const auto first = bytes.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && bytes[first] == '{') return ProblemFormat::StructuredObject;
    return ProblemFormat::DelimitedTable;
}

DecisionProblem problem_from_json(const json& doc, const ParseOptions& options) {
    if (!doc.is_object()) schema_error("$", "expected an object");

    DecisionProblem p;
    const auto& criteria = require_array(require_field(doc, "criteria", "$"), "criteria");
    for (std::size_t j = 0; j < criteria.size(); ++j) {
        const std::string path = fmt::format("criteria[{}]", j);
        const auto& c = criteria[j];
        if (!c.is_object()) schema_error(path, "expected an object");
        Criterion crit;
        crit.name = require_string(require_field(c, "name", path), path + ".name");
        const auto kind = require_string(require_field(c, "kind", path), path + ".kind");
        try {
            crit.kind = parse_criterion_kind(kind);
        } catch (const Error& e) {
            schema_error(path + ".kind", e.violations().front().message);
        }
        crit.weight = require_number(require_field(c, "weight", path), path + ".weight");
        p.criteria.push_back(std::move(crit));
    }

    const auto& alternatives = require_array(require_field(doc, "alternatives", "$"), "alternatives");
    for (std::size_t i = 0; i < alternatives.size(); ++i) {
        p.alternatives.push_back(require_string(alternatives[i], fmt::format("alternatives[{}]", i)));
    }

    if (!doc.contains("scores") && options.allow_missing_scores) return p;
    const auto& scores = require_array(require_field(doc, "scores", "$"), "scores");
    if (scores.size() != p.alternatives.size()) {
        schema_error("scores", fmt::format("{} score rows for {} alternatives", scores.size(),
                                           p.alternatives.size()));
    }
    p.scores = Matrix(scores.size(), p.criteria.size());
    for (std::size_t i = 0; i < scores.size(); ++i) {
        const std::string path = fmt::format("scores[{}]", i);
        const auto& row = require_array(scores[i], path);
        if (row.size() != p.criteria.size()) {
            schema_error(path, fmt::format("{} score columns for {} criteria", row.size(),
                                           p.criteria.size()));
        }
        for (std::size_t j = 0; j < row.size(); ++j) {
            p.scores(i, j) = require_number(row[j], fmt::format("scores[{}][{}]", i, j));
        }
    }
    return p;
}

json problem_to_json(const DecisionProblem& problem) {
    json criteria = json::array();
    for (const auto& c : problem.criteria) {
        criteria.push_back({{"name", c.name}, {"kind", to_string(c.kind)}, {"weight", c.weight}});
    }
    json scores = json::array();
    for (std::size_t i = 0; i < problem.scores.rows(); ++i) {
        const auto row = problem.scores.row(i);
        scores.push_back(json(std::vector<double>(row.begin(), row.end())));
    }
    return {{"criteria", std::move(criteria)},
            {"alternatives", problem.alternatives},
            {"scores", std::move(scores)}};
}

DecisionProblem parse_problem(std::string_view bytes, ProblemFormat format,
                              const ParseOptions& options) {
    require_utf8(bytes);
    if (is_blank(bytes)) throw Error(ErrorCode::SyntaxError, "byte 0", "document is empty");

    if (format == ProblemFormat::DelimitedTable) return parse_delimited(bytes, options);

    json doc;
    try {
        doc = json::parse(bytes);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::SyntaxError, fmt::format("byte {}", e.byte), e.what());
    }
    return problem_from_json(doc, options);
}

DecisionProblem parse_problem(std::string_view bytes, const ParseOptions& options) {
    return parse_problem(bytes, detect_format(bytes), options);
}

std::string serialize_problem(const DecisionProblem& problem, ProblemFormat format) {
    if (format == ProblemFormat::StructuredObject) return problem_to_json(problem).dump(2) + "\n";

    std::string out = "alternative";
    for (const auto& c : problem.criteria) out += "," + csv::escape(c.name);
    out += "\nkind";
    for (const auto& c : problem.criteria) out += fmt::format(",{}", to_string(c.kind));
    out += "\nweight";
    for (const auto& c : problem.criteria) out += fmt::format(",{}", c.weight);
    out += "\n";
    for (std::size_t i = 0; i < problem.scores.rows(); ++i) {
        out += csv::escape(problem.alternatives[i]);
        for (double s : problem.scores.row(i)) out += fmt::format(",{}", s);
        out += "\n";
    }
    return out;
}

std::vector<Scoresheet> parse_scoresheets(std::string_view bytes) {
    require_utf8(bytes);
    if (is_blank(bytes)) throw Error(ErrorCode::SyntaxError, "line 1", "scoresheet file is empty");

    const auto rows = csv::read(bytes);
    static const std::vector<std::string> kHeader{"respondent", "alternative", "criterion", "score"};
    std::vector<std::string> header;
    for (const auto& f : rows.front().fields) header.push_back(trim(f));
    if (header != kHeader) {
        throw Error(ErrorCode::SyntaxError, fmt::format("line {}", rows.front().line),
                    "header must be 'respondent,alternative,criterion,score'");
    }

    std::vector<Scoresheet> sheets;
    std::map<std::string, std::size_t, std::less<>> sheet_index;
    std::set<std::tuple<std::string, std::string, std::string>> seen;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        const std::string where = fmt::format("line {}", row.line);
        if (row.fields.size() != 4) {
            throw Error(ErrorCode::SyntaxError, where,
                        fmt::format("expected 4 fields, found {}", row.fields.size()));
        }
        ScoreEntry entry{trim(row.fields[1]), trim(row.fields[2]), 0};
        const std::string respondent = trim(row.fields[0]);

        double value = 0.0;
        if (!parse_double(row.fields[3], value)) {
            throw Error(ErrorCode::SyntaxError, where,
                        fmt::format("score '{}' is not a number", row.fields[3]));
        }
        if (value != std::floor(value) || value < kMinScore || value > kMaxScore) {
            throw Error(ErrorCode::ScoreRangeError, where,
                        fmt::format("score {} is not an integer in {}..{}", trim(row.fields[3]),
                                    kMinScore, kMaxScore));
        }
        entry.score = static_cast<int>(value);

        if (!seen.emplace(respondent, entry.alternative, entry.criterion).second) {
            throw Error(ErrorCode::DuplicateEntry, where,
                        fmt::format("respondent '{}' scored ({}, {}) twice", respondent,
                                    entry.alternative, entry.criterion));
        }
        auto [it, inserted] = sheet_index.try_emplace(respondent, sheets.size());
        if (inserted) sheets.push_back({respondent, {}});
        sheets[it->second].entries.push_back(std::move(entry));
    }
    return sheets;
}

AggregateMethod parse_aggregate_method(std::string_view text) {
    if (text == "mean" || text == "arithmetic-mean") return AggregateMethod::ArithmeticMean;
    if (text == "median") return AggregateMethod::Median;
    throw Error(ErrorCode::InvalidArgument, "aggregate",
                fmt::format("unknown aggregation method '{}'", text));
}

std::string_view to_string(AggregateMethod method) {
    return method == AggregateMethod::ArithmeticMean ? "arithmetic-mean" : "median";
}

DecisionProblem aggregate(const std::vector<Scoresheet>& sheets, AggregateMethod method,
                          const std::vector<Criterion>& criteria,
                          const std::vector<std::string>& alternatives) {
    if (sheets.empty()) throw Error(ErrorCode::InvalidArgument, "sheets", "no scoresheets to aggregate");

    std::map<std::string, std::size_t, std::less<>> alt_index, crit_index;
    for (std::size_t i = 0; i < alternatives.size(); ++i) alt_index.emplace(alternatives[i], i);
    for (std::size_t j = 0; j < criteria.size(); ++j) crit_index.emplace(criteria[j].name, j);

    const std::size_t n = alternatives.size();
    const std::size_t m = criteria.size();
    // cells[i*m + j] collects one score per respondent
    std::vector<std::vector<double>> cells(n * m);
    std::vector<Violation> violations;
    for (const auto& sheet : sheets) {
        std::vector<bool> covered(n * m, false);
        for (const auto& e : sheet.entries) {
            const auto a = alt_index.find(e.alternative);
            const auto c = crit_index.find(e.criterion);
            if (a == alt_index.end() || c == crit_index.end()) {
                violations.push_back({ErrorCode::UnknownName, sheet.respondent,
                                      fmt::format("entry ({}, {}) names an undeclared {}", e.alternative,
                                                  e.criterion,
                                                  a == alt_index.end() ? "alternative" : "criterion")});
                continue;
            }
            const std::size_t cell = a->second * m + c->second;
            if (covered[cell]) {
                violations.push_back({ErrorCode::DuplicateEntry, sheet.respondent,
                                      fmt::format("({}, {}) scored twice", e.alternative, e.criterion)});
                continue;
            }
            covered[cell] = true;
            cells[cell].push_back(e.score);
        }
        for (std::size_t cell = 0; cell < n * m; ++cell) {
            if (!covered[cell]) {
                violations.push_back({ErrorCode::IncompleteSheet, sheet.respondent,
                                      fmt::format("no score for ({}, {})", alternatives[cell / m],
                                                  criteria[cell % m].name)});
            }
        }
    }
    if (!violations.empty()) throw Error(std::move(violations));

    DecisionProblem p{alternatives, criteria, Matrix(n, m)};
    for (std::size_t cell = 0; cell < n * m; ++cell) {
        auto values = cells[cell];
        // sorted so the result does not depend on respondent order
        std::sort(values.begin(), values.end());
        double result = 0.0;
        if (method == AggregateMethod::ArithmeticMean) {
            for (double v : values) result += v;
            result /= static_cast<double>(values.size());
        } else {
            const std::size_t k = values.size();
            result = k % 2 == 1 ? values[k / 2] : (values[k / 2 - 1] + values[k / 2]) / 2.0;
        }
        p.scores(cell / m, cell % m) = result;
    }
    return p;
}

}  // namespace idealrank
