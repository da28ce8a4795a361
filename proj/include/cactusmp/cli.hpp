#pragma once

namespace cactusmp {

/// Full command-line front end. Returns the process exit code:
/// 0 success, 1 usage or input error, 2 discovered invariant violation.
int run_cli(int argc, const char* const* argv);

}  // namespace cactusmp
