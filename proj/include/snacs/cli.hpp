#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace snacs {

// Command-line front door. Returns 0 on success, 1 when `validate` found
// violations, 2 on usage or format errors. Subcommand output goes to `out`,
// errors and usage text to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace snacs
