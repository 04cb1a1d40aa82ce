#pragma once

#include <iosfwd>

namespace equiform::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kInputError = 2 };

/// Entry point of the equiform executable; never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace equiform::cli
