#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kproj {

/// Runs the command line `args` (without the program name) and returns the
/// process exit code: 0 ok, 1 internal error, 2 axiom or math failure,
/// 3 parse error, 4 limit exceeded, 5 missing metadata.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kproj
