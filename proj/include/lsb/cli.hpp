#pragma once

#include <ostream>

namespace lsb {

/// Command-line entry point.  Exit codes: 0 all checks pass, 1 failures,
/// 2 usage or parse errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lsb
