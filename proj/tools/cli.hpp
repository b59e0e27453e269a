#pragma once

#include <iosfwd>

namespace tcert {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitInput = 1, kExitCertification = 2 };

/// Entry point for `taylorcert <subcommand> ...`; never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tcert
