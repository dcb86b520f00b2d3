#include "scd/matrix.hpp"

#include <algorithm>
#include <string>

namespace scd {

ZeroOneMatrix ZeroOneMatrix::transposed() const {
  ZeroOneMatrix t(cols, rows);
  for (int r = 0; r < rows; ++r)
    for (int c = row[r].first(); c != -1; c = row[r].next(c)) t.set(c, r);
  return t;
}

ZeroOneMatrix adjacency_matrix(const Digraph& d) {
  ZeroOneMatrix m(d.n(), d.n());
  for (int u = 0; u < d.n(); ++u) m.row[u] = d.out_row(u);
  return m;
}

ZeroOneMatrix matrix_from_lines(const std::vector<std::string>& lines) {
  int r = int(lines.size());
  int c = r ? int(lines[0].size()) : 0;
  ZeroOneMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (int(lines[i].size()) != c) throw input_error("matrix rows have differing lengths");
    for (int j = 0; j < c; ++j)
      if (lines[i][j] == '1') m.set(i, j);
  }
  return m;
}

Bigraph split_bigraph(const Digraph& d) { return Bigraph{adjacency_matrix(d)}; }

std::optional<std::vector<BigraphVertexRef>> chordal_bipartite_elimination(const Bigraph& b) {
  int R = b.reds(), B = b.blues();
  ZeroOneMatrix cols = b.bi.transposed();
  Bitset ared(R), ablue(B);
  ared.set_all();
  ablue.set_all();
  std::vector<BigraphVertexRef> order;
  order.reserve(R + B);

  auto chain = [](const std::vector<Bitset>& rows) {
    for (size_t a = 0; a < rows.size(); ++a)
      for (size_t bb = a + 1; bb < rows.size(); ++bb)
        if (!rows[a].is_subset_of(rows[bb]) && !rows[bb].is_subset_of(rows[a])) return false;
    return true;
  };

  while (ared.any() || ablue.any()) {
    int red_pick = -1, blue_pick = -1;
    for (int r = ared.first(); r != -1 && red_pick == -1; r = ared.next(r)) {
      Bitset nb = bit_and(b.bi.row[r], ablue);
      std::vector<Bitset> nbrs;
      for (int x = nb.first(); x != -1; x = nb.next(x))
        nbrs.push_back(bit_and(cols.row[x], ared));
      if (chain(nbrs)) red_pick = r;
    }
    if (red_pick != -1) {
      order.push_back({true, red_pick});
      ared.reset(red_pick);
      continue;
    }
    for (int c = ablue.first(); c != -1 && blue_pick == -1; c = ablue.next(c)) {
      Bitset nb = bit_and(cols.row[c], ared);
      std::vector<Bitset> nbrs;
      for (int x = nb.first(); x != -1; x = nb.next(x))
        nbrs.push_back(bit_and(b.bi.row[x], ablue));
      if (chain(nbrs)) blue_pick = c;
    }
    if (blue_pick == -1) return std::nullopt;
    order.push_back({false, blue_pick});
    ablue.reset(blue_pick);
  }
  return order;
}

bool is_chordal_bipartite(const Bigraph& b) {
  return chordal_bipartite_elimination(b).has_value();
}

bool is_totally_balanced(const ZeroOneMatrix& m) {
  return is_chordal_bipartite(Bigraph{m});
}

namespace detail {

namespace {

struct CycleSearch {
  const std::vector<Bitset>& adj;
  int target_len;
  std::vector<int> path;

  CycleSearch(const std::vector<Bitset>& a, int len) : adj(a), target_len(len) {}

  // Extending to position t: u must touch the last vertex only, among the
  // path so far, except that the second vertex touches the start by
  // construction and the final vertex must close back to it.
  bool extend() {
    int t = int(path.size());
    if (t == target_len) return true;
    int start = path.front(), last = path.back();
    bool final_slot = (t == target_len - 1);
    for (int u = adj[last].next(start); u != -1; u = adj[last].next(u)) {
      bool adj_start = adj[u].test(start);
      if (t >= 2 && adj_start != final_slot) continue;
      bool chord = false;
      for (int j = 1; j + 1 < t && !chord; ++j)
        if (adj[u].test(path[j]) || u == path[j]) chord = true;
      if (chord || u == last) continue;
      path.push_back(u);
      if (extend()) return true;
      path.pop_back();
    }
    return false;
  }
};

} // namespace

std::optional<std::vector<int>> find_chordless_cycle(const std::vector<Bitset>& adj,
                                                     int min_len, int max_len, bool even_only,
                                                     bool skip_length_4) {
  int n = int(adj.size());
  for (int len = min_len; len <= std::min(max_len, n); ++len) {
    if (even_only && (len & 1)) continue;
    if (skip_length_4 && len == 4) continue;
    for (int s = 0; s < n; ++s) {
      CycleSearch cs(adj, len);
      cs.path.push_back(s);
      // all other cycle vertices must exceed s, so s is the canonical start
      if (cs.extend()) return cs.path;
    }
  }
  return std::nullopt;
}

} // namespace detail

std::optional<std::pair<std::vector<int>, std::vector<int>>> find_cycle_submatrix(
    const ZeroOneMatrix& m, int size_limit) {
  if (m.rows > size_limit || m.cols > size_limit)
    throw guard_error("find_cycle_submatrix refused: matrix " + std::to_string(m.rows) + "x" +
                      std::to_string(m.cols) + " exceeds limit " + std::to_string(size_limit));
  int R = m.rows, n = m.rows + m.cols;
  std::vector<Bitset> adj(n, Bitset(n));
  for (int r = 0; r < R; ++r)
    for (int c = m.row[r].first(); c != -1; c = m.row[r].next(c)) {
      adj[r].set(R + c);
      adj[R + c].set(r);
    }
  auto cyc = detail::find_chordless_cycle(adj, 6, n, /*even_only=*/true);
  if (!cyc) return std::nullopt;
  std::vector<int> rows, cols;
  for (int v : *cyc)
    (v < R ? rows : cols).push_back(v < R ? v : v - R);
  std::sort(rows.begin(), rows.end());
  std::sort(cols.begin(), cols.end());
  return std::make_pair(rows, cols);
}

bool walk_valid(const Digraph& g, const Walk& w) {
  if (w.vertices.empty()) return false;
  for (int v : w.vertices)
    if (v < 0 || v >= g.n()) return false;
  if (w.closed && w.vertices.front() != w.vertices.back()) return false;
  for (size_t i = 0; i + 1 < w.vertices.size(); ++i) {
    int a = w.vertices[i], b = w.vertices[i + 1];
    if (!g.arc(a, b)) return false;  // loops are diagonal arcs, so a==b works
  }
  return true;
}

bool has_strong_chord(const Digraph& g, const Walk& w) {
  if (!g.is_symmetric()) throw contract_error("has_strong_chord requires a symmetric digraph");
  if (!walk_valid(g, w)) throw contract_error("has_strong_chord: invalid walk");
  if (w.closed) {
    int k = w.length();
    if (k <= 0) return false;
    // positions 0..k-1; difference mod k must be odd and not 1 or k-1
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        int diff = (j - i) % k;
        if (!(diff & 1) || diff == 1 || diff == k - 1) continue;
        int a = w.vertices[i], b = w.vertices[j];
        if (g.arc(a, b)) return true;
      }
    return false;
  }
  int k = int(w.vertices.size());
  for (int i = 0; i < k; ++i)
    for (int j = i + 3; j < k; j += 2)
      if (g.arc(w.vertices[i], w.vertices[j])) return true;
  return false;
}

namespace {

struct BadWalkSearch {
  const Digraph& g;
  int target_len;  // even, >= 6
  std::vector<int> path;

  BadWalkSearch(const Digraph& gg, int len) : g(gg), target_len(len) {}

  // prune any extension creating a strong chord of the eventual closed walk:
  // pairs (j, t) with t-j odd >= 3, except (0, target_len-1)
  bool chord_free_extension(int u, int t) const {
    for (int j = t - 3; j >= 0; j -= 2) {
      if (j == 0 && t == target_len - 1) continue;
      int a = path[j];
      if (a == u ? g.has_loop(u) : g.arc(a, u)) return false;
    }
    return true;
  }

  bool extend() {
    int t = int(path.size());
    int start = path.front();
    if (t == target_len) return g.arc(path.back(), start);
    const Bitset& nb = g.out_row(path.back());
    for (int u = nb.first(); u != -1; u = nb.next(u)) {
      if (u < start) continue;  // canonical walks start at their minimum vertex
      if (t == target_len - 1 && !g.arc(u, start)) continue;
      if (!chord_free_extension(u, t)) continue;
      path.push_back(u);
      if (extend()) return true;
      path.pop_back();
    }
    return false;
  }
};

} // namespace

std::optional<Walk> find_bad_walk(const Digraph& g) {
  return find_bad_walk(g, std::max(6, 2 * g.n()));
}

std::optional<Walk> find_bad_walk(const Digraph& g, int max_len) {
  if (!g.is_symmetric()) throw contract_error("find_bad_walk requires a symmetric digraph");
  for (int len = 6; len <= max_len; len += 2) {
    for (int s = 0; s < g.n(); ++s) {
      BadWalkSearch bw(g, len);
      bw.path.push_back(s);
      if (bw.extend()) {
        Walk w;
        w.vertices = bw.path;
        w.vertices.push_back(s);
        w.closed = true;
        return w;
      }
    }
  }
  return std::nullopt;
}

} // namespace scd
