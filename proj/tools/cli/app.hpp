#pragma once

#include <ostream>

namespace nhho::cli {

// Entry point shared by the nhho binary and the CLI tests. Returns the
// process exit code: 0 success, 1 invalid input, 2 verification failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nhho::cli
