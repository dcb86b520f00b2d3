#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace scd {

// Malformed user input: file contents, vertex ids, family parameters.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A documented API precondition was violated by the caller.
struct contract_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A size guard refused to start an exponential search.
struct guard_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// General domination has no feasible solution; carries the vertices that
// nobody can dominate.
struct infeasible_error : std::runtime_error {
  std::vector<int> undominatable;
  infeasible_error(const std::string& msg, std::vector<int> verts)
      : std::runtime_error(msg), undominatable(std::move(verts)) {}
};

} // namespace scd
