#pragma once

// Command-line front end.  `run` is the whole program minus process plumbing,
// so it can be driven from tests.
//
// Exit codes: 0 success, 1 domain error (one line "error: <kind>: <message>"
// on stderr), 2 parse / usage error.

#include <ostream>
#include <string>
#include <vector>

namespace layoutalg::cli {

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace layoutalg::cli
