#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace motzeta {

/// Run one command line (without the program name). Returns the exit status:
/// 0 on success, 2 on model validation diagnostics, 1 on any other error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace motzeta
