#pragma once
#include <iosfwd>

namespace lieclosed::cli {

// Runs the command-line tool and returns its exit status:
// 0 on success, 1 on invalid input, 2 on numerical failure or a failed --check.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace lieclosed::cli
