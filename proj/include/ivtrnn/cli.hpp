#pragma once

#include <ostream>

namespace ivtrnn {

// Full command-line entry point, parameterized on the output streams so
// tests can drive it in-process. Returns the process exit code: 0 on
// success, 2 for unreadable input (bad flags, malformed documents),
// 3 for readable but invalid input, 4 for internal failures.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

} // namespace ivtrnn
