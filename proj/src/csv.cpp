#include "csv.hpp"

#include <fmt/format.h>

#include "idealrank/errors.hpp"

namespace idealrank::csv {

std::vector<Row> read(std::string_view text) {
    std::vector<Row> rows;
    std::size_t pos = 0;
    std::size_t line = 1;
    while (pos < text.size()) {
        Row row{line, {}};
        std::string field;
        bool in_quotes = false;
        bool row_done = false;
        const std::size_t start_line = line;
        while (pos < text.size() && !row_done) {
            const char ch = text[pos++];
            if (in_quotes) {
                if (ch == '"') {
                    if (pos < text.size() && text[pos] == '"') {
                        field += '"';
                        ++pos;
                    } else {
                        in_quotes = false;
                    }
                } else {
                    if (ch == '\n') ++line;
                    field += ch;
                }
                continue;
            }
            switch (ch) {
                case '"': in_quotes = true; break;
                case ',':
                    row.fields.push_back(std::move(field));
                    field.clear();
                    break;
                case '\n':
                    ++line;
                    row_done = true;
                    break;
                case '\r':
                    if (pos == text.size() || text[pos] == '\n') break;
                    field += ch;
                    break;
                default: field += ch;
            }
        }
        if (in_quotes) {
            throw Error(ErrorCode::SyntaxError, fmt::format("line {}", start_line),
                        "unterminated quoted field");
        }
        row.fields.push_back(std::move(field));
        const bool blank = row.fields.size() == 1 && row.fields.front().empty();
        if (!blank) rows.push_back(std::move(row));
    }
    return rows;
}

std::string escape(std::string_view field) {
    if (field.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(field);
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

}  // namespace idealrank::csv
