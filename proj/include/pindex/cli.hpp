#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pindex {

/// Runs the command line `args` (args[0] is the program name). Writes one
/// JSON report to `out`; usage errors go to `err`.
///
/// Exit codes: 0 pass or feasible, 1 checked failure or computational
/// error, 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pindex
