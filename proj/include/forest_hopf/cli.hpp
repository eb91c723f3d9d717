#pragma once

#include <iosfwd>

namespace fhopf {

/// Exit codes of the `forest-hopf` command.
enum ExitCode : int {
    kExitOk = 0,
    kExitCheckFailed = 1,
    kExitUsage = 2,
    kExitDomain = 3,
    kExitWeight = 4,
};

/// Entry point of the `forest-hopf` command with injectable streams.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace fhopf
