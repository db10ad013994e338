#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rainbow::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2, kTimeout = 3 };

/// Runs one command line (without the program name). "-" as a graph or
/// colouring argument reads `in`; results go to `out` as single-line JSON,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace rainbow::cli
