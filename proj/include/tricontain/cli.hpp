#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tricontain::cli {

// Full command-line front end: parses args (natural order, program name
// excluded), runs the requested command, writes the report to `out` and
// diagnostics to `err`. Returns the process exit code: 0 success, 2 domain
// or parse errors, 3 numeric failures.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace tricontain::cli
