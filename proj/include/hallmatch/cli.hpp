#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hallmatch::cli {

/// Runs the command line tool on `args` (program name excluded). Returns 0 on
/// success, 1 when a verification fails, 2 on a usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hallmatch::cli
