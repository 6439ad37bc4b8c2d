#pragma once

#include <iosfwd>

namespace sdikit::cli {

/// Exit codes shared by every command.
enum ExitCode : int {
  kTrue = 0,       ///< success, predicate holds, equation solvable
  kFalse = 1,      ///< predicate fails, equation unsolvable
  kUsage = 2,      ///< bad arguments or malformed input
  kResource = 3,   ///< a state cap was hit
};

/// Entry point of the `sdikit` tool. Writes results to `out` and diagnostics
/// to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sdikit::cli
