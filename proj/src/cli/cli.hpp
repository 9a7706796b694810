#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace besselbound::cli {

/// Exit codes: 0 success, 1 input error, 2 hypothesis violated / vacuous bound / failed verification.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace besselbound::cli
