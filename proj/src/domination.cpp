#include "scd/domination.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <sstream>
#include <stdexcept>

#include "scd/gamma.hpp"

namespace scd {

SparseSymGraph sparse_from_digraph(const Digraph& g) {
  if (!g.is_symmetric())
    throw contract_error("general domination requires a symmetric digraph");
  SparseSymGraph s;
  s.n = g.n();
  s.nbrs.resize(s.n);
  for (int v = 0; v < s.n; ++v) s.nbrs[v] = g.out_row(v).to_vector();
  return s;
}

DominationResult general_dominate_sparse(const SparseSymGraph& g, const VertexOrdering& ord) {
  int n = g.n;
  if (!ord.valid_for(n))
    throw contract_error("general_dominate: ordering is not a permutation of the vertices");
  std::vector<int> empty;
  for (int v = 0; v < n; ++v)
    if (g.nbrs[v].empty()) empty.push_back(v);
  if (!empty.empty()) {
    std::ostringstream msg;
    msg << "general domination infeasible: " << empty.size()
        << " vertex(es) have empty neighbourhoods";
    throw infeasible_error(msg.str(), empty);
  }

  std::vector<int> pos = ord.positions();
  std::vector<int> last_nbr(n);
  for (int v = 0; v < n; ++v) {
    int best = -1, bp = -1;
    for (int u : g.nbrs[v])
      if (pos[u] > bp) {
        bp = pos[u];
        best = u;
      }
    last_nbr[v] = best;
  }

  DominationResult res;
  res.labels.assign(n, 0);
  for (int p = 0; p < n; ++p) {
    int x = ord.order[p];
    if (res.labels[x] & kLabelN) continue;
    int y = last_nbr[x];
    res.labels[x] |= kLabelC;
    if (res.labels[y] & kLabelD)
      throw std::logic_error("domination greedy labelled D twice");
    res.labels[y] |= kLabelD;
    for (int z : g.nbrs[y]) res.labels[z] |= kLabelN;
  }
  for (int v = 0; v < n; ++v) {
    if (res.labels[v] & kLabelC) res.C.push_back(v);
    if (res.labels[v] & kLabelD) res.D.push_back(v);
  }
  return res;
}

DominationResult general_dominate(const Digraph& g, const VertexOrdering& ord,
                                  OrderingCheck check) {
  SparseSymGraph s = sparse_from_digraph(g);
  if (check == OrderingCheck::Verify) {
    if (auto w = gamma_witness(g, ord)) {
      std::ostringstream msg;
      msg << "general_dominate: ordering is not a strong ordering; Gamma at rows ("
          << w->row_lo << "," << w->row_hi << ") cols (" << w->col_lo << "," << w->col_hi
          << ")";
      throw contract_error(msg.str());
    }
  }
  return general_dominate_sparse(s, ord);
}

std::optional<std::pair<int, std::vector<int>>> brute_force_min_domination(const Digraph& g,
                                                                           int n_guard) {
  int n = g.n();
  if (n > n_guard || n > 25)
    throw guard_error("min-domination oracle refused: n=" + std::to_string(n) +
                      " exceeds guard " + std::to_string(std::min(n_guard, 25)));
  if (!g.is_symmetric())
    throw contract_error("min-domination oracle requires a symmetric digraph");
  std::vector<uint32_t> mask(n, 0);
  for (int v = 0; v < n; ++v)
    for (int u = g.out_row(v).first(); u != -1; u = g.out_row(v).next(u))
      mask[v] |= uint32_t(1) << u;
  for (int v = 0; v < n; ++v)
    if (mask[v] == 0) return std::nullopt;

  int best_size = n + 1;
  uint32_t best_set = 0;
  for (uint32_t set = 0; set < (uint32_t(1) << n); ++set) {
    int sz = std::popcount(set);
    if (sz >= best_size) continue;
    bool covers = true;
    for (int v = 0; v < n && covers; ++v)
      if (!(mask[v] & set)) covers = false;
    if (covers) {
      best_size = sz;
      best_set = set;
    }
  }
  if (best_size > n) return std::nullopt;  // n==0 is feasible with the empty set
  std::vector<int> witness;
  for (int v = 0; v < n; ++v)
    if (best_set & (uint32_t(1) << v)) witness.push_back(v);
  return std::make_pair(best_size, witness);
}

namespace {

void max_disjoint_dfs(const std::vector<uint32_t>& mask, int v, uint32_t used, int chosen,
                      int& best) {
  int n = int(mask.size());
  if (chosen + (n - v) <= best) return;
  if (v == n) {
    best = std::max(best, chosen);
    return;
  }
  if ((mask[v] & used) == 0)
    max_disjoint_dfs(mask, v + 1, used | mask[v], chosen + 1, best);
  max_disjoint_dfs(mask, v + 1, used, chosen, best);
}

} // namespace

int max_disjoint_neighbourhoods_oracle(const Digraph& g, int n_guard) {
  int n = g.n();
  if (n > n_guard || n > 25)
    throw guard_error("max-disjoint oracle refused: n=" + std::to_string(n) +
                      " exceeds guard " + std::to_string(std::min(n_guard, 25)));
  if (!g.is_symmetric())
    throw contract_error("max-disjoint oracle requires a symmetric digraph");
  std::vector<uint32_t> mask(n, 0);
  for (int v = 0; v < n; ++v)
    for (int u = g.out_row(v).first(); u != -1; u = g.out_row(v).next(u))
      mask[v] |= uint32_t(1) << u;
  int best = 0;
  max_disjoint_dfs(mask, 0, 0, 0, best);
  return best;
}

IntervalInstance make_reflexive_interval_instance(int n, int max_reach, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> reach(n);
  int prev = 0;
  for (int v = 0; v < n; ++v) {
    int r = v + 1 + int(rng() % uint64_t(std::max(1, max_reach)));
    r = std::min(r, n - 1);
    r = std::max({r, v, prev});  // non-decreasing keeps the identity order strong
    reach[v] = r;
    prev = r;
  }
  IntervalInstance inst;
  inst.graph.n = n;
  inst.graph.nbrs.resize(n);
  for (int v = 0; v < n; ++v) {
    inst.graph.nbrs[v].push_back(v);  // reflexive
    for (int w = v + 1; w <= reach[v]; ++w) {
      inst.graph.nbrs[v].push_back(w);
      inst.graph.nbrs[w].push_back(v);
    }
  }
  inst.ordering = identity_ordering(n);
  return inst;
}

} // namespace scd
