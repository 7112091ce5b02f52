#pragma once

#include <ostream>

namespace degen::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, usage_error = 2 };

/// Parses argv and runs one subcommand (eval, table, series, verify, mc).
/// JSON (or CSV for tables) goes to out; a one-line diagnostic goes to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace degen::cli
