#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace grhopf::cli {

enum ExitCode : int { kOk = 0, kCheckFailure = 1, kUsage = 2 };

/// Runs the command line `args` (without the program name). Graph input
/// falls back to `in` when no positional graph or file is given.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace grhopf::cli
