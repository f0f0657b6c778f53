#pragma once

#include <iosfwd>

namespace polyneck {

/// Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 invalid
/// input or I/O failure.
enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitInvalid = 2 };

/// Entry point shared by the polyneck executable and the tests. Reports go to
/// `out` (or to the --out file), diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace polyneck
