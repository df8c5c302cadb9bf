#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ncfapprox::cli {

enum ExitCode { kOk = 0, kUsage = 1, kParse = 2, kDomain = 3, kVerifyFailed = 4 };

/// Runs one command line (without the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ncfapprox::cli
