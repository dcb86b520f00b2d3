#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "scd/bitset.hpp"
#include "scd/errors.hpp"

namespace scd {

/// Directed graph with possible loops over dense 0-based vertex ids.
/// The adjacency matrix is the whole state: arc u->v iff row u has bit v,
/// a loop is a diagonal bit. Symmetry, reflexivity, tournament-ness are
/// always derived, never stored.
class Digraph {
public:
  Digraph() = default;
  explicit Digraph(int n) : n_(n), rows_(n, Bitset(n)) {}

  static Digraph build(int n, const std::vector<std::pair<int, int>>& arcs);

  int n() const { return n_; }
  bool arc(int u, int v) const { return rows_[u].test(v); }
  void add_arc(int u, int v) { rows_[u].set(v); }
  void remove_arc(int u, int v) { rows_[u].reset(v); }
  bool has_loop(int v) const { return rows_[v].test(v); }

  const Bitset& out_row(int u) const { return rows_[u]; }

  int arc_count() const;  // loops included
  int loop_count() const;

  bool is_symmetric() const;
  bool is_reflexive() const;
  bool is_irreflexive() const;

  Digraph transposed() const;
  /// Symmetric closure; loops preserved.
  Digraph underlying() const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

private:
  int n_ = 0;
  std::vector<Bitset> rows_;
};

/// Permutation of the vertices; order[i] is the vertex at position i.
struct VertexOrdering {
  std::vector<int> order;

  bool valid_for(int n) const;
  /// position_of[v] = index of v in order. Requires valid ordering.
  std::vector<int> positions() const;

  friend bool operator==(const VertexOrdering&, const VertexOrdering&) = default;
};

VertexOrdering identity_ordering(int n);

struct InducedSubgraph {
  Digraph graph;
  std::vector<int> vertices;    // new id -> old id, ascending
  std::vector<int> old_to_new;  // old id -> new id, -1 if absent
};

/// Subgraph induced by s, vertices relabelled in ascending original order.
InducedSubgraph induced(const Digraph& d, const std::vector<int>& s);
InducedSubgraph induced(const Digraph& d, const Bitset& s);

/// Neighbourhood in a symmetric digraph; contains v iff v has a loop.
/// Throws contract_error on asymmetric input.
Bitset neighbours(const Digraph& d, int v);
Bitset out_nbrs(const Digraph& d, int v);
Bitset in_nbrs(const Digraph& d, int v);

/// Strongly connected components, ignoring loops. Returns component index
/// per vertex; components are numbered in reverse topological order of the
/// condensation (0 = a sink component).
std::vector<int> strong_components(const Digraph& d, int* count = nullptr);

/// Exact isomorphism test including loops; permutation backtracking with
/// degree/loop pruning. Intended for small graphs (obstruction sizes).
bool isomorphic(const Digraph& a, const Digraph& b);

} // namespace scd
