#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sdr {

/// Runs one CLI invocation (args exclude the program name) against the given
/// streams. Returns the process exit code:
///   0  operation ran and the property held,
///   1  operation ran and the property failed (violations / candidates),
///   2  usage, parse, or precondition error (one-line diagnostic on err).
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sdr
