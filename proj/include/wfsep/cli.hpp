#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wfsep {

/// Runs one command and writes the report to `out`. Returns the process exit
/// code: 0 for a positive verdict, 1 for a negative one, 2 for usage or input
/// errors (with a trailing `ERROR <message>` line).
int dispatch(const std::vector<std::string>& args, std::ostream& out);

}  // namespace wfsep
