#pragma once

#include <iosfwd>

namespace idealrank::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;  // parse, validation or degenerate problem
inline constexpr int kExitUsage = 2;

// Entry point behind the idealrank executable. Output goes to `out`;
// diagnostics only to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace idealrank::cli
