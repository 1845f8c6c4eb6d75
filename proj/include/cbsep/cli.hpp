#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cbsep {

/// Full command-line surface, callable in-process for tests.  Returns the
/// process exit code: 0 success, 1 assertion/certificate failure, 2 input
/// error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace cbsep
