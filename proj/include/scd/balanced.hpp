#pragma once

#include <optional>
#include <vector>

#include "scd/certificates.hpp"
#include "scd/digraph.hpp"

namespace scd {

/// Level assignment of a balanced digraph: every arc goes from level L to
/// level L+1; levels are normalized to minimum 1 per weak component.
struct LevelPartition {
  std::vector<int> level;      // per vertex, 1-based
  std::vector<int> component;  // weak component index, ordered by smallest vertex
  int components = 0;
  int max_level = 0;

  std::vector<std::vector<int>> levels_of_component(int c) const;
};

/// BFS potential assignment; nullopt exactly when some closed walk has
/// unequal forward/backward arc counts (loops force a contradiction).
std::optional<LevelPartition> level_partition(const Digraph& d);

/// Balanced-digraph recognition: strongly chordal iff every consecutive
/// level pair induces a chordal bigraph. Acceptance returns a
/// gamma-verified strong ordering; rejection returns the failing level
/// pair's induced long cycle as a Fence obstruction. Throws contract_error
/// on unbalanced input.
Certificate strongly_chordal_balanced(const Digraph& d);

/// Induced oriented even cycle of length >= 6 with alternating arc
/// directions (no directed path of length two), as a closed walk.
std::optional<Walk> find_fence(const Digraph& d);

} // namespace scd
