#pragma once

#include <ostream>

namespace polarmap::cli {

/// Exit codes: 0 success, 1 a validator failed, 2 bad configuration, 3 I/O failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace polarmap::cli
