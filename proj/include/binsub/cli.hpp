#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace binsub {

// Exit codes: 0 success, 2 input validation, 3 budget exceeded with partial
// output, 4 internal invariant breach.
int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace binsub
