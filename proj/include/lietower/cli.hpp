#ifndef LIETOWER_CLI_HPP
#define LIETOWER_CLI_HPP

#include <iosfwd>

namespace lietower {

/// Runs the command line tool. Returns 0 on success, 1 on bad input and 2
/// when an internal invariant fails.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lietower

#endif  // LIETOWER_CLI_HPP
