#pragma once

#include <iosfwd>

namespace ghl::app {

/// Exit codes: 0 success, 1 computation or verification failure, 2 usage error.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace ghl::app
