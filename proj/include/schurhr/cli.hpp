#pragma once

#include <iosfwd>

namespace schurhr {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitReproFailure = 1,
  kExitValidation = 2,
  kExitPrecondition = 3,
};

/// Entry point of the `schurhr` tool. Output is buffered and written to
/// `out` only when the command completes; diagnostics go to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace schurhr
