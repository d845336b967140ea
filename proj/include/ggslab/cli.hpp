#pragma once

#include <ostream>

namespace ggslab {

/// Exit codes of the command-line tool.
enum ExitCode : int { exit_ok = 0, exit_input = 2, exit_counterexample = 3, exit_resource = 4 };

/// Entry point of the `ggslab` tool, with streams injectable for tests.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ggslab
