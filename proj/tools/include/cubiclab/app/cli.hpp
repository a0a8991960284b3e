#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cubiclab::app {

/// Runs the command line (arguments without the program name). The JSON
/// report goes to `out`, the human-readable summary to `err`. Returns 0 when
/// every check passed, 1 on a failed check or computation, 2 on usage or
/// input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cubiclab::app
