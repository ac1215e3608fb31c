#pragma once

#include <iosfwd>
#include <string>
#include <vector>

// Command-line front end. run() is the whole program minus main(), so tests
// can drive subcommands in-process.
//
// Exit codes: 0 success, 2 argument/validation error (message names the
// offending flag), 1 computational failure (diagnostic JSON on stdout).

namespace qredux::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qredux::cli
