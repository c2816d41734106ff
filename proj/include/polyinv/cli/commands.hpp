#pragma once

#include <iosfwd>

namespace polyinv {

enum ExitCode { kExitOk = 0, kExitFailure = 1, kExitUsage = 2 };

/// Entry point of the `polyinv` tool.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace polyinv
