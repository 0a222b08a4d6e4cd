#pragma once

#include <ostream>

namespace siegel::cli {

enum ExitCode { kPass = 0, kCheckFailed = 1, kParseError = 2, kValidationError = 3, kInternalError = 4 };

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace siegel::cli
