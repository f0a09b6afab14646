#pragma once

#include <iosfwd>

namespace ancestry {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitVerification = 2;

// Entry point of the `ancestry` command line tool: gen, label, query, verify,
// bench. Output files default to `out`; diagnostics go to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ancestry
