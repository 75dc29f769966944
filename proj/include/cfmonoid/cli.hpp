#pragma once

#include <iosfwd>

namespace cfmonoid {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kSyntaxError = 2,
  kNotAssociative = 3,
  kBadColoring = 4,
};

/// Entry point of the `cfmonoid` tool with injectable streams. Reports go to
/// `out`, diagnostics to `err`.
int run_cli(int argc, char const* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace cfmonoid
