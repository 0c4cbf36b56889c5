#pragma once

#include <ostream>

namespace semi {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  exit_ok = 0,
  exit_verdict_false = 1,
  exit_input_error = 2,
  exit_resource_limit = 3,
};

/// Entry point shared by the `semi` binary and the tests. Results go to
/// `out`, diagnostics to `err`. `in` serves `-` input paths.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace semi
