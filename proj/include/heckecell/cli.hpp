#pragma once

#include <iosfwd>

namespace heckecell {

/// Exit codes: 0 ok, 1 verification failure, 2 invalid input, 3 unsupported type.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace heckecell
