#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kdense {

/// Runs one command line (without the program name). Writes the result JSON
/// to `out` and diagnostics to `err`. Returns 0 on success, 2 on a usage
/// error and 1 when the solver or an input file fails.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kdense
