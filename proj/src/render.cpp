#include "idealrank/render.hpp"

#include <algorithm>
#include <fmt/format.h>

#include "csv.hpp"

namespace idealrank {

namespace {

std::string pad_right(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string pad_left(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

}  // namespace

std::string render_table(const Table& table) {
    std::size_t label_width = table.corner.size();
    for (const auto& l : table.row_labels) label_width = std::max(label_width, l.size());
    std::vector<std::size_t> widths;
    for (std::size_t j = 0; j < table.column_labels.size(); ++j) {
        std::size_t w = table.column_labels[j].size();
        for (const auto& row : table.cells) w = std::max(w, row[j].size());
        widths.push_back(w);
    }

    std::string out = table.title + "\n";
    std::string line = pad_right(table.corner, label_width);
    for (std::size_t j = 0; j < widths.size(); ++j) line += "  " + pad_left(table.column_labels[j], widths[j]);
    out += line + "\n";
    std::size_t rule = label_width;
    for (auto w : widths) rule += 2 + w;
    out += std::string(rule, '-') + "\n";
    for (std::size_t i = 0; i < table.cells.size(); ++i) {
        line = pad_right(table.row_labels[i], label_width);
        for (std::size_t j = 0; j < widths.size(); ++j) line += "  " + pad_left(table.cells[i][j], widths[j]);
        out += line + "\n";
    }
    for (const auto& note : table.notes) out += note + "\n";
    return out;
}

std::string render_table(const ExplainReport& report) {
    std::string out = fmt::format("ideal mode: {}, distance: {}, rounding: {}\n",
                                  to_string(report.options.ideal_mode),
                                  to_string(report.options.distance), to_string(report.rounding));
    for (const auto& t : report.tables) out += "\n" + render_table(t);
    return out;
}

std::string render_table(const RankingReport& report, DisplayRounding rounding) {
    const auto ex = explain(report, rounding);
    std::string out = fmt::format("ideal mode: {}, distance: {}, rounding: {}\n",
                                  to_string(report.options.ideal_mode),
                                  to_string(report.options.distance), to_string(rounding));
    for (std::size_t k = kWeightedTable; k < ex.tables.size(); ++k) out += "\n" + render_table(ex.tables[k]);
    return out;
}

std::string render_table(const SweepResult& sweep, DisplayRounding rounding) {
    Table t;
    t.title = fmt::format("Weight sweep on {} ({}, {})", sweep.criterion,
                          to_string(sweep.options.ideal_mode), to_string(sweep.options.distance));
    t.corner = "w";
    t.column_labels = sweep.alternatives;
    t.column_labels.push_back("Top");
    for (const auto& pt : sweep.points) {
        t.row_labels.push_back(format_fixed(pt.weight, rounding));
        std::vector<std::string> row;
        if (pt.error) {
            for (std::size_t a = 0; a < sweep.alternatives.size(); ++a) row.push_back("-");
            row.push_back(std::string(to_string(pt.error->code)));
        } else {
            for (double c : pt.closeness) row.push_back(format_fixed(c, rounding));
            row.push_back(sweep.alternatives[order_by_rank(pt.ranks).front()]);
        }
        t.cells.push_back(std::move(row));
    }
    if (sweep.crossovers.empty()) t.notes.push_back("no change of the top-ranked alternative");
    for (const auto& c : sweep.crossovers) {
        t.notes.push_back(fmt::format("top changes {} -> {} between w = {} and {}",
                                      sweep.alternatives[c.from], sweep.alternatives[c.to],
                                      format_fixed(c.weight_low, rounding),
                                      format_fixed(c.weight_high, rounding)));
    }
    return render_table(t);
}

std::string render_table(const StabilityReport& report) {
    Table t;
    t.title = fmt::format("Rank frequencies over {} trials (seed {}, {})", report.trials, report.seed,
                          report.noise.descriptor());
    t.corner = "Alternative";
    for (std::size_t r = 0; r < report.alternatives.size(); ++r) t.column_labels.push_back(fmt::format("#{}", r + 1));
    t.column_labels.push_back("Baseline");
    t.row_labels = report.alternatives;
    for (std::size_t a = 0; a < report.alternatives.size(); ++a) {
        std::vector<std::string> row;
        for (auto f : report.frequency[a]) row.push_back(std::to_string(f));
        row.push_back(std::to_string(report.baseline_ranks[a]));
        t.cells.push_back(std::move(row));
    }
    std::string modal = "modal ranking:";
    for (auto idx : order_by_rank(report.modal_ranking)) modal += " " + report.alternatives[idx];
    t.notes.push_back(modal);
    t.notes.push_back(fmt::format("degenerate trials: {}", report.degenerate_trials));
    return render_table(t);
}

std::string render_delimited(const RankingReport& report) {
    std::string out = "alternative,s_plus,s_minus,closeness,rank\n";
    for (std::size_t i = 0; i < report.closeness.size(); ++i) {
        out += fmt::format("{},{},{},{},{}\n", csv::escape(report.problem.alternatives[i]),
                           report.separations.s_plus[i], report.separations.s_minus[i],
                           report.closeness[i], report.ranks[i]);
    }
    return out;
}

std::string render_delimited(const ExplainReport& report) {
    std::string out;
    for (const auto& t : report.tables) {
        out += "# " + t.title + "\n" + csv::escape(t.corner);
        for (const auto& c : t.column_labels) out += "," + csv::escape(c);
        out += "\n";
        for (std::size_t i = 0; i < t.cells.size(); ++i) {
            out += csv::escape(t.row_labels[i]);
            for (const auto& cell : t.cells[i]) out += "," + cell;
            out += "\n";
        }
    }
    return out;
}

std::string render_delimited(const SweepResult& sweep) {
    std::string out = "weight";
    for (const auto& a : sweep.alternatives) out += "," + csv::escape(a);
    out += ",top\n";
    for (const auto& pt : sweep.points) {
        out += fmt::format("{}", pt.weight);
        if (pt.error) {
            for (std::size_t a = 0; a < sweep.alternatives.size(); ++a) out += ",";
            out += fmt::format(",{}\n", to_string(pt.error->code));
            continue;
        }
        for (double c : pt.closeness) out += fmt::format(",{}", c);
        out += "," + csv::escape(sweep.alternatives[order_by_rank(pt.ranks).front()]) + "\n";
    }
    return out;
}

std::string render_delimited(const StabilityReport& report) {
    std::string out = "alternative";
    for (std::size_t r = 0; r < report.alternatives.size(); ++r) out += fmt::format(",rank_{}", r + 1);
    out += "\n";
    for (std::size_t a = 0; a < report.alternatives.size(); ++a) {
        out += csv::escape(report.alternatives[a]);
        for (auto f : report.frequency[a]) out += fmt::format(",{}", f);
        out += "\n";
    }
    return out;
}

}  // namespace idealrank
