#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace graphdim::cli {

enum ExitCode : int {
    kOk = 0,
    kInputError = 1,
    kUsageError = 2,
    kResourceLimit = 3,
    kLawViolation = 4,
};

/// Entry point shared by the executable and the CLI tests.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace graphdim::cli
