#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cohomotopy::cli {

/// Exit codes: 0 success, 2 bad input, 3 hypothesis failure, 4 unsupported operation,
/// 1 anything else.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cohomotopy::cli
