#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace subnil::cli {

// Runs the command line given argv-style arguments (without argv[0]).
// Returns the process exit code; never throws.
int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

} // namespace subnil::cli
