#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mukai::cli {

enum ExitCode { Success = 0, Usage = 1, Domain = 2, BoundExhausted = 3 };

/// Runs one command line (args excludes the program name). Reports go to out,
/// machine-readable errors to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace mukai::cli
