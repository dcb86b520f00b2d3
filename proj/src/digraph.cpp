#include "scd/digraph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace scd {

Digraph Digraph::build(int n, const std::vector<std::pair<int, int>>& arcs) {
  if (n < 0) throw input_error("vertex count must be non-negative");
  Digraph d(n);
  for (auto [u, v] : arcs) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw input_error("arc (" + std::to_string(u) + "," + std::to_string(v) +
                        ") out of range for n=" + std::to_string(n));
    d.add_arc(u, v);
  }
  return d;
}

int Digraph::arc_count() const {
  int m = 0;
  for (const auto& r : rows_) m += r.count();
  return m;
}

int Digraph::loop_count() const {
  int m = 0;
  for (int v = 0; v < n_; ++v) m += has_loop(v);
  return m;
}

bool Digraph::is_symmetric() const {
  for (int u = 0; u < n_; ++u)
    for (int v = rows_[u].first(); v != -1; v = rows_[u].next(v))
      if (!rows_[v].test(u)) return false;
  return true;
}

bool Digraph::is_reflexive() const {
  for (int v = 0; v < n_; ++v)
    if (!has_loop(v)) return false;
  return true;
}

bool Digraph::is_irreflexive() const { return loop_count() == 0; }

Digraph Digraph::transposed() const {
  Digraph t(n_);
  for (int u = 0; u < n_; ++u)
    for (int v = rows_[u].first(); v != -1; v = rows_[u].next(v)) t.add_arc(v, u);
  return t;
}

Digraph Digraph::underlying() const {
  Digraph u = *this;
  for (int a = 0; a < n_; ++a)
    for (int b = rows_[a].first(); b != -1; b = rows_[a].next(b)) u.add_arc(b, a);
  return u;
}

bool VertexOrdering::valid_for(int n) const {
  if (int(order.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (int v : order) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

std::vector<int> VertexOrdering::positions() const {
  std::vector<int> pos(order.size());
  for (int i = 0; i < int(order.size()); ++i) pos[order[i]] = i;
  return pos;
}

VertexOrdering identity_ordering(int n) {
  VertexOrdering o;
  o.order.resize(n);
  std::iota(o.order.begin(), o.order.end(), 0);
  return o;
}

InducedSubgraph induced(const Digraph& d, const std::vector<int>& s) {
  Bitset mask(d.n());
  for (int v : s) {
    if (v < 0 || v >= d.n()) throw input_error("induced: vertex out of range");
    mask.set(v);
  }
  return induced(d, mask);
}

InducedSubgraph induced(const Digraph& d, const Bitset& s) {
  InducedSubgraph out;
  out.old_to_new.assign(d.n(), -1);
  for (int v = s.first(); v != -1; v = s.next(v)) {
    out.old_to_new[v] = int(out.vertices.size());
    out.vertices.push_back(v);
  }
  int m = int(out.vertices.size());
  out.graph = Digraph(m);
  for (int i = 0; i < m; ++i) {
    Bitset row = bit_and(d.out_row(out.vertices[i]), s);
    for (int v = row.first(); v != -1; v = row.next(v))
      out.graph.add_arc(i, out.old_to_new[v]);
  }
  return out;
}

Bitset neighbours(const Digraph& d, int v) {
  if (!d.is_symmetric())
    throw contract_error("neighbours() requires a symmetric digraph");
  return d.out_row(v);
}

Bitset out_nbrs(const Digraph& d, int v) { return d.out_row(v); }

Bitset in_nbrs(const Digraph& d, int v) {
  Bitset in(d.n());
  for (int u = 0; u < d.n(); ++u)
    if (d.arc(u, v)) in.set(u);
  return in;
}

namespace {

struct TarjanState {
  const Digraph& d;
  std::vector<int> index, low, comp;
  std::vector<int> stack;
  std::vector<char> on_stack;
  int next_index = 0, next_comp = 0;

  explicit TarjanState(const Digraph& g)
      : d(g), index(g.n(), -1), low(g.n(), 0), comp(g.n(), -1), on_stack(g.n(), 0) {}

  void run(int root) {
    // iterative Tarjan; frames hold (vertex, next candidate)
    std::vector<std::pair<int, int>> frames{{root, -1}};
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      auto& [v, it] = frames.back();
      int w = d.out_row(v).next(it);
      it = w;
      if (w == -1) {
        if (low[v] == index[v]) {
          while (true) {
            int x = stack.back();
            stack.pop_back();
            on_stack[x] = 0;
            comp[x] = next_comp;
            if (x == v) break;
          }
          ++next_comp;
        }
        frames.pop_back();
        if (!frames.empty()) {
          int p = frames.back().first;
          low[p] = std::min(low[p], low[v]);
        }
        continue;
      }
      if (w == v) continue;  // loop arc
      if (index[w] == -1) {
        index[w] = low[w] = next_index++;
        stack.push_back(w);
        on_stack[w] = 1;
        frames.emplace_back(w, -1);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
  }
};

} // namespace

std::vector<int> strong_components(const Digraph& d, int* count) {
  TarjanState t(d);
  for (int v = 0; v < d.n(); ++v)
    if (t.index[v] == -1) t.run(v);
  if (count) *count = t.next_comp;
  return t.comp;
}

namespace {

bool iso_extend(const Digraph& a, const Digraph& b, std::vector<int>& map,
                std::vector<char>& used, int i) {
  int n = a.n();
  if (i == n) return true;
  for (int cand = 0; cand < n; ++cand) {
    if (used[cand]) continue;
    if (a.has_loop(i) != b.has_loop(cand)) continue;
    bool ok = true;
    for (int j = 0; j < i && ok; ++j) {
      if (a.arc(i, j) != b.arc(cand, map[j])) ok = false;
      if (ok && a.arc(j, i) != b.arc(map[j], cand)) ok = false;
    }
    if (!ok) continue;
    map[i] = cand;
    used[cand] = 1;
    if (iso_extend(a, b, map, used, i + 1)) return true;
    used[cand] = 0;
  }
  return false;
}

} // namespace

bool isomorphic(const Digraph& a, const Digraph& b) {
  if (a.n() != b.n() || a.arc_count() != b.arc_count() ||
      a.loop_count() != b.loop_count())
    return false;
  int n = a.n();
  // degree/loop profile prune
  auto profile = [](const Digraph& g) {
    std::vector<std::tuple<int, int, bool>> p;
    for (int v = 0; v < g.n(); ++v) {
      int out = g.out_row(v).count();
      int in = 0;
      for (int u = 0; u < g.n(); ++u) in += g.arc(u, v);
      p.emplace_back(out, in, g.has_loop(v));
    }
    std::sort(p.begin(), p.end());
    return p;
  };
  if (profile(a) != profile(b)) return false;
  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  return iso_extend(a, b, map, used, 0);
}

} // namespace scd
