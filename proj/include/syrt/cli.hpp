#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace syrt {

// Runs the command line (arguments only, without the program name) and
// writes the result to `out` (or a --out file). Exit codes: 0 success,
// 1 internal invariant failure, 2 parse/usage error, 3 resource cap.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace syrt
