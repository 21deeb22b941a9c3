#pragma once

#include <iosfwd>

namespace qlab::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, usage_error = 2 };

/// Entry point of the qlab tool. Writes results to `out` and diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace qlab::cli
