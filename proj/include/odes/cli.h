#ifndef ODES_CLI_H
#define ODES_CLI_H

#include <iosfwd>

namespace odes {

// Exit codes: 0 success, 2 parse error, 3 unsupported combination,
// 4 selftest verification failure, 1 other errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace odes

#endif
