#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace scd {

// Exit codes: 0 strongly chordal / success, 1 not strongly chordal (or
// infeasible domination), 2 undecided or refused by a size guard, 3 input
// or usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace scd
