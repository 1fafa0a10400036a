#pragma once

#include <iosfwd>

namespace vb {

// Full command-line front end, factored out of main() so tests can drive it
// in-process. Streams stand in for stdin/stdout/stderr.
int run_cli(int argc, const char* const* argv, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace vb
