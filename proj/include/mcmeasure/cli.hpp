#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mcmeasure::cli {

/// Runs one command line (args excludes the program name) and returns the
/// process exit code: 0 on success, 1 on a failed check, 2 on any error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mcmeasure::cli
