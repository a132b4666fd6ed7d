#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace singwords {

// Runs the command-line interface on the given arguments (program name
// excluded). Exit codes: 0 success, 1 domain error, 2 usage error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace singwords
