#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace multirank {

/// Runs the command line given as argv-style tokens (program name excluded).
/// Returns the process exit code: 0 pass, 1 verification failure, 2 usage
/// error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace multirank
