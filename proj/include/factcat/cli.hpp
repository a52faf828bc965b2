#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace factcat::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kOk = 0,          // success, or the predicate holds
    kFalse = 1,       // the predicate fails, or a suite failed
    kParse = 2,       // malformed input or invalid morphism
    kGuard = 3,       // enumeration or numeric bound exceeded
    kCapability = 4,  // operation unavailable for the monoid
};

/// Runs the tool on argv-style arguments (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace factcat::cli
