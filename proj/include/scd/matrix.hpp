#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "scd/certificates.hpp"
#include "scd/digraph.hpp"

namespace scd {

/// Rectangular 0,1 matrix stored as row bitsets.
struct ZeroOneMatrix {
  int rows = 0, cols = 0;
  std::vector<Bitset> row;

  ZeroOneMatrix() = default;
  ZeroOneMatrix(int r, int c) : rows(r), cols(c), row(r, Bitset(c)) {}
  bool at(int r, int c) const { return row[r].test(c); }
  void set(int r, int c) { row[r].set(c); }
  ZeroOneMatrix transposed() const;

  friend bool operator==(const ZeroOneMatrix&, const ZeroOneMatrix&) = default;
};

ZeroOneMatrix adjacency_matrix(const Digraph& d);
ZeroOneMatrix matrix_from_lines(const std::vector<std::string>& lines);

/// Bipartite graph with a fixed red/blue bipartition; reds index the rows
/// of the bi-adjacency matrix, blues the columns.
struct Bigraph {
  ZeroOneMatrix bi;
  int reds() const { return bi.rows; }
  int blues() const { return bi.cols; }
  bool edge(int r, int b) const { return bi.at(r, b); }
};

/// B(D): red v1 and blue v2 per vertex, edge v1->w2 per arc v->w, so the
/// bi-adjacency equals the adjacency matrix of D.
Bigraph split_bigraph(const Digraph& d);

struct BigraphVertexRef {
  bool red = true;
  int index = 0;
  friend bool operator==(const BigraphVertexRef&, const BigraphVertexRef&) = default;
};

/// Simple-vertex elimination on a bigraph (a vertex is simple when its
/// neighbours' neighbourhoods form an inclusion chain; isolated vertices
/// are trivially simple). Ties break on (red first, lowest index).
/// Returns the elimination order, or nullopt when elimination stalls.
std::optional<std::vector<BigraphVertexRef>> chordal_bipartite_elimination(const Bigraph& b);

bool is_chordal_bipartite(const Bigraph& b);

/// Totally balanced test via the bigraph whose bi-adjacency is m.
bool is_totally_balanced(const ZeroOneMatrix& m);

/// Search for a cycle submatrix (square, size >= 3, exactly two 1s per row
/// and column) as an induced length >= 6 cycle of the bigraph of m.
/// Returns (row set, column set) or nullopt. Guarded by size_limit on both
/// dimensions (default 16).
std::optional<std::pair<std::vector<int>, std::vector<int>>> find_cycle_submatrix(
    const ZeroOneMatrix& m, int size_limit = 16);

/// Check that w is a walk of g (consecutive vertices adjacent; a repeated
/// consecutive vertex needs its loop; closed walks end where they start).
bool walk_valid(const Digraph& g, const Walk& w);

/// Strong chord: an edge (possibly a loop) between walk positions at odd
/// index difference other than +-1; for closed walks the difference is
/// taken modulo the length, so the closing edge never qualifies.
bool has_strong_chord(const Digraph& g, const Walk& w);

/// Search for an even closed walk of length in [6, max_len] without a
/// strong chord. Walks are enumerated shortest-first from their smallest
/// vertex, pruning any prefix that already carries a chord, so the result
/// is deterministic. Sound; complete only up to max_len.
std::optional<Walk> find_bad_walk(const Digraph& g, int max_len);
/// Default bound 2n (at least 6).
std::optional<Walk> find_bad_walk(const Digraph& g);

namespace detail {

/// Chordless cycle search in an undirected simple graph given as symmetric
/// adjacency rows (diagonal ignored). Returns the first cycle found
/// scanning lengths ascending from min_len (skipping odd lengths when
/// even_only), starts ascending, extensions ascending; that cycle is
/// induced. Intended for obstruction-sized graphs.
std::optional<std::vector<int>> find_chordless_cycle(const std::vector<Bitset>& adj,
                                                     int min_len, int max_len,
                                                     bool even_only,
                                                     bool skip_length_4 = false);

} // namespace detail

} // namespace scd
