#include "scd/recognition.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace scd {

namespace {

// chain check: every pair of rows comparable under inclusion
bool rows_chain(const std::vector<Bitset>& rows) {
  for (size_t a = 0; a < rows.size(); ++a)
    for (size_t b = a + 1; b < rows.size(); ++b)
      if (!rows[a].is_subset_of(rows[b]) && !rows[b].is_subset_of(rows[a])) return false;
  return true;
}

} // namespace

bool is_simple_vertex_sym(const Digraph& g, int v) {
  if (!g.is_symmetric())
    throw contract_error("is_simple_vertex_sym requires a symmetric digraph");
  const Bitset& nb = g.out_row(v);
  std::vector<Bitset> rows;
  for (int x = nb.first(); x != -1; x = nb.next(x)) rows.push_back(g.out_row(x));
  return rows_chain(rows);
}

namespace detail {

bool is_simplicial_digraph_masked(const Digraph& d, const Digraph& dT, int v,
                                  const Bitset& alive) {
  Bitset out = bit_and(d.out_row(v), alive);
  Bitset in = bit_and(dT.out_row(v), alive);
  for (int u = in.first(); u != -1; u = in.next(u))
    for (int w = out.first(); w != -1; w = out.next(w))
      if (!d.arc(u, w)) return false;
  return true;
}

bool is_simple_vertex_digraph_masked(const Digraph& d, const Digraph& dT, int v,
                                     const Bitset& alive) {
  Bitset in = bit_and(dT.out_row(v), alive);
  Bitset out = bit_and(d.out_row(v), alive);
  std::vector<Bitset> rows;
  for (int x = in.first(); x != -1; x = in.next(x))
    rows.push_back(bit_and(d.out_row(x), alive));
  if (!rows_chain(rows)) return false;
  rows.clear();
  for (int x = out.first(); x != -1; x = out.next(x))
    rows.push_back(bit_and(dT.out_row(x), alive));
  return rows_chain(rows);
}

} // namespace detail

bool is_simplicial_digraph(const Digraph& d, int v) {
  Bitset all(d.n());
  all.set_all();
  return detail::is_simplicial_digraph_masked(d, d.transposed(), v, all);
}

bool is_simple_vertex_digraph(const Digraph& d, int v) {
  Bitset all(d.n());
  all.set_all();
  return detail::is_simple_vertex_digraph_masked(d, d.transposed(), v, all);
}

bool is_peak(const Digraph& d, int v) {
  for (int u = 0; u < d.n(); ++u) {
    if (!d.arc(u, v)) continue;
    if (d.out_row(u).intersects(d.out_row(v))) return true;
  }
  return false;
}

Certificate strong_order_symmetric(const Digraph& g, SymEliminationAudit* audit) {
  if (!g.is_symmetric())
    throw contract_error("strong_order_symmetric requires a symmetric digraph");
  int n = g.n();
  VertexOrdering result;
  result.order.reserve(n);
  Bitset alive(n);
  alive.set_all();
  // reach[x] = vertices strictly above x in the accumulated containment order
  std::vector<Bitset> reach(n, Bitset(n));
  std::vector<Bitset> cur(n, Bitset(n));

  for (int step = 0; step < n; ++step) {
    for (int v = alive.first(); v != -1; v = alive.next(v))
      cur[v] = bit_and(g.out_row(v), alive);
    // accumulate strict containments among survivors
    for (int x = alive.first(); x != -1; x = alive.next(x))
      for (int y = alive.first(); y != -1; y = alive.next(y)) {
        if (x == y) continue;
        if (cur[x].is_subset_of(cur[y]) && !(cur[x] == cur[y])) reach[x].set(y);
      }
    // transitive closure (Warshall with bitset rows)
    for (int k = 0; k < n; ++k)
      for (int x = 0; x < n; ++x)
        if (reach[x].test(k)) reach[x] |= reach[k];
    for (int x = 0; x < n; ++x)
      if (reach[x].test(x))
        throw std::logic_error("elimination order relation became reflexive");
    for (int x = alive.first(); x != -1; x = alive.next(x))
      for (int y = reach[x].first(); y != -1; y = reach[x].next(y))
        if (reach[y].test(x))
          throw std::logic_error("elimination order relation became symmetric");

    Bitset minimal = alive;
    for (int x = alive.first(); x != -1; x = alive.next(x)) {
      Bitset above = bit_and(reach[x], alive);
      for (int y = above.first(); y != -1; y = above.next(y)) minimal.reset(y);
    }

    std::vector<int> simple;
    for (int v = alive.first(); v != -1; v = alive.next(v)) {
      std::vector<Bitset> rows;
      for (int x = cur[v].first(); x != -1; x = cur[v].next(x)) rows.push_back(cur[x]);
      if (rows_chain(rows)) simple.push_back(v);
    }

    if (audit) {
      SymEliminationAudit::Step st;
      st.alive = alive.to_vector();
      for (int x = alive.first(); x != -1; x = alive.next(x)) {
        Bitset above = bit_and(reach[x], alive);
        for (int y = above.first(); y != -1; y = above.next(y)) st.relations.emplace_back(x, y);
      }
      st.simple_vertices = simple;
      audit->steps.push_back(std::move(st));
    }

    if (simple.empty())
      return UnwitnessedCert{"no simple vertex among the remaining " +
                             std::to_string(alive.count()) + " vertices (step " +
                             std::to_string(step + 1) + ")"};

    int chosen = -1;
    for (int v : simple)
      if (minimal.test(v)) {
        chosen = v;
        break;
      }
    if (chosen == -1)
      throw std::logic_error("simple vertex exists but no poset-minimal simple vertex");

    if (audit) {
      auto& st = audit->steps.back();
      for (int v : simple)
        if (minimal.test(v)) st.candidates.push_back(v);
      st.chosen = chosen;
    }

    result.order.push_back(chosen);
    alive.reset(chosen);
  }
  return StrongOrderingCert{std::move(result)};
}

std::optional<GammaWitness> verify_strong_ordering(const Digraph& d, const VertexOrdering& ord) {
  return gamma_witness(d, ord);
}

namespace {

// single-word fast path used by the factorial oracle (n <= 64 always holds
// under the factorial guard)
bool gamma_free_perm_u64(const std::vector<uint64_t>& rows, int n, const int* p) {
  uint64_t pr[64];
  for (int i = 0; i < n; ++i) {
    uint64_t src = rows[p[i]], r = 0;
    for (int j = 0; j < n; ++j) r |= ((src >> p[j]) & 1ull) << j;
    pr[i] = r;
  }
  for (int i = 0; i < n; ++i) {
    if (!pr[i]) continue;
    for (int j = i + 1; j < n; ++j) {
      uint64_t both = pr[i] & pr[j];
      uint64_t zero = pr[i] & ~pr[j];
      if (both && zero && std::countr_zero(both) < 63 - std::countl_zero(zero)) return false;
    }
  }
  return true;
}

std::vector<uint64_t> u64_rows(const Digraph& d) {
  std::vector<uint64_t> rows(d.n(), 0);
  for (int u = 0; u < d.n(); ++u)
    for (int v = d.out_row(u).first(); v != -1; v = d.out_row(u).next(v))
      rows[u] |= 1ull << v;
  return rows;
}

std::optional<std::vector<int>> oracle_serial(const std::vector<uint64_t>& rows, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (gamma_free_perm_u64(rows, n, perm.data())) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

// Shard the permutation space by first vertex. Each shard scans its suffix
// permutations in lexicographic order, so the per-shard hit is the shard's
// first success; the global answer is the hit in the smallest shard.
std::optional<std::vector<int>> oracle_parallel(const std::vector<uint64_t>& rows, int n) {
  std::vector<std::optional<std::vector<int>>> hits(n);
  std::atomic<int> best{n};
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
  for (int first = 0; first < n; ++first) {
    if (first > best.load(std::memory_order_relaxed)) continue;
    std::vector<int> perm(n);
    perm[0] = first;
    int at = 1;
    for (int v = 0; v < n; ++v)
      if (v != first) perm[at++] = v;
    do {
      if (first > best.load(std::memory_order_relaxed)) break;
      if (gamma_free_perm_u64(rows, n, perm.data())) {
        hits[first] = perm;
        int cur = best.load(std::memory_order_relaxed);
        while (first < cur && !best.compare_exchange_weak(cur, first)) {
        }
        break;
      }
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
  }
  for (int first = 0; first < n; ++first)
    if (hits[first]) return hits[first];
  return std::nullopt;
}

} // namespace

std::optional<VertexOrdering> brute_force_strongly_chordal(const Digraph& d, int n_limit,
                                                           Exec exec) {
  if (d.n() > n_limit)
    throw guard_error("factorial oracle refused: n=" + std::to_string(d.n()) +
                      " exceeds limit " + std::to_string(n_limit));
  int n = d.n();
  if (n == 0) return VertexOrdering{};
  auto rows = u64_rows(d);
  std::optional<std::vector<int>> hit;
  if (exec == Exec::Parallel)
    hit = oracle_parallel(rows, n);
  else
    hit = oracle_serial(rows, n);
  if (!hit) return std::nullopt;
  return VertexOrdering{std::move(*hit)};
}

std::optional<VertexOrdering> simple_ordering_digraph(const Digraph& d) {
  int n = d.n();
  Digraph dT = d.transposed();
  Bitset alive(n);
  alive.set_all();
  VertexOrdering out;
  out.order.reserve(n);
  for (int step = 0; step < n; ++step) {
    int chosen = -1;
    for (int v = alive.first(); v != -1; v = alive.next(v))
      if (detail::is_simple_vertex_digraph_masked(d, dT, v, alive)) {
        chosen = v;
        break;
      }
    if (chosen == -1) return std::nullopt;
    out.order.push_back(chosen);
    alive.reset(chosen);
  }
  return out;
}

} // namespace scd
