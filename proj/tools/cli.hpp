#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rook_orbits::cli {

// Exit status: 0 all PASS (FLAG allowed), 1 FAIL or inconsistency, 2 bad arguments.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rook_orbits::cli
