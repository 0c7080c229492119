#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace artmod::cli {

/// Runs the command-line interface on the given arguments (without argv[0]).
/// Exit codes: 0 success / property verified, 1 usage or validation error,
/// 2 property violated (witness printed), 3 falsification of a certified
/// statement.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace artmod::cli
