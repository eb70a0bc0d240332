#pragma once

#include <ostream>
#include <span>
#include <string>

namespace qbelief {

/// Exit codes: 0 success, 1 goal not (or only approximately) reached,
/// 2 usage, parse or validation error.
enum ExitStatus : int { kExitOk = 0, kExitUnachieved = 1, kExitError = 2 };

/// Entry point for the `qbelief` tool; args excludes the program name.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace qbelief
