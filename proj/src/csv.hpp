#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace idealrank::csv {

struct Row {
    std::size_t line = 0;  // 1-based source line
    std::vector<std::string> fields;
};

// Comma-separated rows with optional double-quoted fields ("" escapes a quote).
// Blank lines are skipped; a trailing CR is dropped. Throws Error(SyntaxError)
// on an unterminated quote.
std::vector<Row> read(std::string_view text);

std::string escape(std::string_view field);

}  // namespace idealrank::csv
