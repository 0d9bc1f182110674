#pragma once

#include <ostream>

namespace hermcodes {

/// Exit codes: 0 all checks pass, 1 a check failed or an error occurred,
/// 2 usage or parameter error, 3 enumeration budget exceeded.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hermcodes
