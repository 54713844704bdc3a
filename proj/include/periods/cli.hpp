#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace periods {

/// Exit codes: 0 success, 1 verification failure, 2 parse or validation error.
/// JSON results go to `out`; error JSON goes to `err`. `args` excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace periods
