#pragma once

#include <ostream>

namespace legendre::cli {

enum ExitCode : int { ok = 0, verification_failure = 1, usage_error = 2 };

/// Runs the command line; writes the console table or JSON to `out` and
/// error objects to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace legendre::cli
