#pragma once

#include <iosfwd>

namespace fpg {

// Command-line dispatch. Exit codes: 0 success, 1 parse or usage error,
// 2 enumeration overflow, 3 inconsistent facts.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace fpg
