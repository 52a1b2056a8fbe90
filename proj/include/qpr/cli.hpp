#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qpr {

/// Runs one CLI invocation; `args` excludes the program name. Returns the
/// process exit code: 0 on success, 1 on domain errors (unattainable
/// sequence, singular pivot block, failed selftest), 2 on malformed input
/// (bad flags, unreadable/asymmetric matrix files).
int cli_main(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace qpr
