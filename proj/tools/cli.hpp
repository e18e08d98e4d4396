#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cplanar::cli {

/// Runs the command line front end. args excludes the program name.
/// Returns 0 when the command ran (verdicts are in the output), 1 on a usage
/// error and 2 when the input could not be read or parsed.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cplanar::cli
