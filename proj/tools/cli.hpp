#pragma once

#include <iosfwd>

namespace faraday::cli {

// Full command-line front end. Returns the process exit status:
// 0 success, 2 invalid configuration, 1 internal error. Data goes to `out`
// (or the --out file); diagnostics go to `err` only.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace faraday::cli
