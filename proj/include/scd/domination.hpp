#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "scd/digraph.hpp"

namespace scd {

/// Adjacency-list view of a graph with possible loops, for the linear-time
/// domination path at scales where dense rows do not fit. nbrs[v] is sorted
/// and contains v itself exactly when v has a loop.
struct SparseSymGraph {
  int n = 0;
  std::vector<std::vector<int>> nbrs;

  bool has_loop(int v) const {
    return std::binary_search(nbrs[v].begin(), nbrs[v].end(), v);
  }
  long long degree_sum() const {
    long long s = 0;
    for (const auto& l : nbrs) s += (long long)l.size();
    return s;
  }
};

/// Throws contract_error when g is not symmetric.
SparseSymGraph sparse_from_digraph(const Digraph& g);

enum : uint8_t { kLabelC = 1, kLabelD = 2, kLabelN = 4 };

struct DominationResult {
  std::vector<int> D;            // general dominating set, ascending
  std::vector<int> C;            // pairwise-disjoint-neighbourhood set, ascending
  std::vector<uint8_t> labels;   // kLabelC | kLabelD | kLabelN per vertex
};

enum class OrderingCheck { Verify, Trust };

/// Greedy C/D/N labelling along a strong ordering: take the first vertex x
/// not labelled N, its last neighbour y in the ordering, label x:C, y:D and
/// all of N(y):N; repeat. Runs in O(n + sum of degrees) after bucketing.
/// Throws contract_error (with the Gamma witness) when verification is on
/// and ord is not a strong ordering; throws infeasible_error listing the
/// vertices with empty neighbourhoods.
DominationResult general_dominate(const Digraph& g, const VertexOrdering& ord,
                                  OrderingCheck check = OrderingCheck::Verify);
DominationResult general_dominate_sparse(const SparseSymGraph& g, const VertexOrdering& ord);

/// Minimum general dominating set by subset enumeration (smallest size,
/// then lowest bitmask). nullopt when infeasible. Guarded at n <= n_guard.
std::optional<std::pair<int, std::vector<int>>> brute_force_min_domination(const Digraph& g,
                                                                           int n_guard = 20);

/// Maximum number of vertices with pairwise disjoint neighbourhoods.
int max_disjoint_neighbourhoods_oracle(const Digraph& g, int n_guard = 20);

/// Reflexive proper-interval-style instance whose identity ordering is a
/// strong ordering by construction; used for scaling tests.
struct IntervalInstance {
  SparseSymGraph graph;
  VertexOrdering ordering;
};
IntervalInstance make_reflexive_interval_instance(int n, int max_reach, uint64_t seed);

} // namespace scd
