#pragma once

#include <optional>
#include <random>
#include <vector>

#include "scd/digraph.hpp"
#include "scd/gamma.hpp"

namespace scd::test {

inline Digraph sym_graph(int n, const std::vector<std::pair<int, int>>& edges,
                         const std::vector<int>& loops = {}) {
  Digraph d(n);
  for (auto [u, v] : edges) {
    d.add_arc(u, v);
    d.add_arc(v, u);
  }
  for (int v : loops) d.add_arc(v, v);
  return d;
}

// all labelled symmetric digraphs with loops on n vertices, coded by
// n*(n-1)/2 edge bits then n loop bits
inline int sym_code_bits(int n) { return n * (n - 1) / 2 + n; }

inline Digraph sym_from_code(int n, uint64_t code) {
  Digraph d(n);
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if (code >> bit & 1) {
        d.add_arc(u, v);
        d.add_arc(v, u);
      }
  for (int v = 0; v < n; ++v, ++bit)
    if (code >> bit & 1) d.add_arc(v, v);
  return d;
}

// irreflexive tournaments coded by one orientation bit per pair
inline int tournament_code_bits(int n) { return n * (n - 1) / 2; }

inline Digraph tournament_from_code(int n, uint64_t code, uint64_t loop_mask = 0) {
  Digraph d(n);
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit) {
      if (code >> bit & 1)
        d.add_arc(u, v);
      else
        d.add_arc(v, u);
    }
  for (int v = 0; v < n; ++v)
    if (loop_mask >> v & 1) d.add_arc(v, v);
  return d;
}

inline Digraph random_symmetric(int n, std::mt19937_64& rng, double edge_p = 0.5,
                                double loop_p = 0.5) {
  Digraph d(n);
  std::bernoulli_distribution e(edge_p), l(loop_p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (e(rng)) {
        d.add_arc(u, v);
        d.add_arc(v, u);
      }
  for (int v = 0; v < n; ++v)
    if (l(rng)) d.add_arc(v, v);
  return d;
}

inline Digraph random_digraph(int n, std::mt19937_64& rng, double p = 0.35) {
  Digraph d(n);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (coin(rng)) d.add_arc(u, v);
  return d;
}

// balanced by construction: arcs only between consecutive random levels
inline Digraph random_balanced(int n, std::mt19937_64& rng, int max_levels = 4,
                               double p = 0.5) {
  Digraph d(n);
  std::vector<int> level(n);
  std::uniform_int_distribution<int> lv(1, max_levels);
  for (int v = 0; v < n; ++v) level[v] = lv(rng);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && level[v] == level[u] + 1 && coin(rng)) d.add_arc(u, v);
  return d;
}

// independent quadruple-enumeration oracle for the gamma scan
inline std::optional<GammaWitness> gamma_witness_bruteforce(const Digraph& d,
                                                            const VertexOrdering& ord) {
  int n = d.n();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l)
          if (d.arc(ord.order[i], ord.order[k]) && d.arc(ord.order[i], ord.order[l]) &&
              d.arc(ord.order[j], ord.order[k]) && !d.arc(ord.order[j], ord.order[l]))
            return GammaWitness{i, j, k, l};
  return std::nullopt;
}

} // namespace scd::test
