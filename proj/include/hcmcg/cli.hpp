#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hcmcg {

// Exit codes: 0 success, 1 verification failure or computational error, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hcmcg
