#include <doctest.h>

#include <algorithm>
#include <bit>
#include <chrono>

#include "helpers.hpp"
#include "scd/domination.hpp"
#include "scd/recognition.hpp"

using namespace scd;
using namespace scd::test;

namespace {

VertexOrdering strong_ordering_of(const Digraph& g) {
  Certificate c = strong_order_symmetric(g);
  REQUIRE(certificate_accepts(c));
  return std::get<StrongOrderingCert>(c).ordering;
}

bool disjoint_neighbourhoods(const Digraph& g, const std::vector<int>& C) {
  for (size_t a = 0; a < C.size(); ++a)
    for (size_t b = a + 1; b < C.size(); ++b)
      if (g.out_row(C[a]).intersects(g.out_row(C[b]))) return false;
  return true;
}

bool dominates(const Digraph& g, const std::vector<int>& D) {
  Bitset ds(g.n());
  for (int v : D) ds.set(v);
  for (int v = 0; v < g.n(); ++v)
    if (!g.out_row(v).intersects(ds)) return false;
  return true;
}

// classical-domination reference with an explicit neighbourhood convention
int min_domination_reference(const Digraph& g, bool closed) {
  int n = g.n();
  std::vector<uint32_t> mask(n, 0);
  for (int v = 0; v < n; ++v) {
    for (int u = g.out_row(v).first(); u != -1; u = g.out_row(v).next(u))
      if (u != v) mask[v] |= uint32_t(1) << u;
    if (closed) mask[v] |= uint32_t(1) << v;
  }
  int best = -1;
  for (uint32_t set = 0; set < (uint32_t(1) << n); ++set) {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v)
      if (!(mask[v] & set)) ok = false;
    if (ok && (best == -1 || std::popcount(set) < best)) best = std::popcount(set);
  }
  return best;
}

} // namespace

TEST_CASE("greedy labelling on the documented examples") {
  Digraph edge = sym_graph(2, {{0, 1}});
  auto r1 = general_dominate(edge, strong_ordering_of(edge));
  CHECK(r1.D == std::vector<int>{0, 1});
  CHECK(r1.C == std::vector<int>{0, 1});

  Digraph rp3 = sym_graph(3, {{0, 1}, {1, 2}}, {0, 1, 2});
  auto r2 = general_dominate(rp3, strong_ordering_of(rp3));
  CHECK(r2.D == std::vector<int>{1});
  CHECK(r2.C.size() == 1);

  Digraph star = sym_graph(4, {{0, 1}, {0, 2}, {0, 3}});
  auto r3 = general_dominate(star, strong_ordering_of(star));
  CHECK(r3.D.size() == 2);
  CHECK(dominates(star, r3.D));
}

TEST_CASE("contract and infeasibility errors") {
  Digraph rc4 = sym_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, {0, 1, 2, 3});
  CHECK_THROWS_AS(general_dominate(rc4, identity_ordering(4)), contract_error);

  Digraph lonely(1);
  try {
    general_dominate(lonely, identity_ordering(1));
    FAIL("expected infeasible_error");
  } catch (const infeasible_error& e) {
    CHECK(e.undominatable == std::vector<int>{0});
  }

  // a reflexive isolated vertex dominates itself
  Digraph rlonely = Digraph::build(1, {{0, 0}});
  auto r = general_dominate(rlonely, identity_ordering(1));
  CHECK(r.D == std::vector<int>{0});
}

TEST_CASE("label accounting and C-disjointness") {
  std::mt19937_64 rng(31);
  int tested = 0;
  while (tested < 150) {
    int n = 2 + int(rng() % 6);
    Digraph g = random_symmetric(n, rng, 0.5, 0.5);
    if (!certificate_accepts(strong_order_symmetric(g))) continue;
    bool feasible = true;
    for (int v = 0; v < n; ++v)
      if (g.out_row(v).none()) feasible = false;
    if (!feasible) continue;
    ++tested;
    auto res = general_dominate(g, strong_ordering_of(g));
    CHECK(res.C.size() == res.D.size());
    CHECK(dominates(g, res.D));
    CHECK(disjoint_neighbourhoods(g, res.C));
    for (int v = 0; v < n; ++v) CHECK((res.labels[v] & (kLabelC | kLabelN)) != 0);
  }
}

TEST_CASE("duality against the subset oracles") {
  std::mt19937_64 rng(32);
  int tested = 0;
  while (tested < 120) {
    int n = 2 + int(rng() % 6);
    Digraph g = random_symmetric(n, rng, 0.5, 0.5);
    if (!certificate_accepts(strong_order_symmetric(g))) continue;
    auto minimum = brute_force_min_domination(g);
    if (!minimum) continue;
    ++tested;
    auto res = general_dominate(g, strong_ordering_of(g));
    int dual = max_disjoint_neighbourhoods_oracle(g);
    CHECK(int(res.D.size()) == minimum->first);
    CHECK(int(res.C.size()) == dual);
    CHECK(minimum->first == dual);
  }
}

TEST_CASE("reflexive and irreflexive specializations") {
  std::mt19937_64 rng(33);
  int ref = 0, irr = 0;
  while (ref < 40 || irr < 40) {
    int n = 2 + int(rng() % 5);
    bool reflexive = rng() & 1;
    Digraph g = random_symmetric(n, rng, 0.6, 0.0);
    if (reflexive)
      for (int v = 0; v < n; ++v) g.add_arc(v, v);
    if (!certificate_accepts(strong_order_symmetric(g))) continue;
    auto minimum = brute_force_min_domination(g);
    if (!minimum) continue;
    if (reflexive) {
      if (ref >= 40) continue;
      ++ref;
      CHECK(minimum->first == min_domination_reference(g, /*closed=*/true));
    } else {
      if (irr >= 40) continue;
      ++irr;
      CHECK(minimum->first == min_domination_reference(g, /*closed=*/false));
    }
  }
}

TEST_CASE("oracle guards and examples") {
  Digraph edge = sym_graph(2, {{0, 1}});
  auto m = brute_force_min_domination(edge);
  REQUIRE(m.has_value());
  CHECK(m->first == 2);
  CHECK_FALSE(brute_force_min_domination(Digraph(1)).has_value());
  CHECK(max_disjoint_neighbourhoods_oracle(edge) == 2);

  Digraph rtri = sym_graph(3, {{0, 1}, {1, 2}, {0, 2}}, {0, 1, 2});
  CHECK(max_disjoint_neighbourhoods_oracle(rtri) == 1);

  Digraph c4 = sym_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(max_disjoint_neighbourhoods_oracle(c4) == 2);

  CHECK_THROWS_AS(brute_force_min_domination(Digraph(21)), guard_error);
}

TEST_CASE("interval instances are valid and scale") {
  auto inst = make_reflexive_interval_instance(500, 6, 1234);
  // spot-check the strong ordering on a dense digraph copy
  Digraph d(inst.graph.n);
  for (int v = 0; v < inst.graph.n; ++v)
    for (int u : inst.graph.nbrs[v]) d.add_arc(v, u);
  CHECK(d.is_symmetric());
  CHECK_FALSE(gamma_witness(d, inst.ordering).has_value());

  auto res = general_dominate_sparse(inst.graph, inst.ordering);
  CHECK(res.C.size() == res.D.size());

  // runtime should scale roughly with the degree sum
  auto time_for = [](int n) {
    auto inst2 = make_reflexive_interval_instance(n, 8, 99);
    auto t0 = std::chrono::steady_clock::now();
    auto r = general_dominate_sparse(inst2.graph, inst2.ordering);
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
    return std::make_pair(ms / double(inst2.graph.degree_sum()), r.D.size());
  };
  time_for(2000);  // warm up
  double small = 1e9, large = 1e9;
  for (int rep = 0; rep < 3; ++rep) small = std::min(small, time_for(10000).first);
  for (int rep = 0; rep < 3; ++rep) large = std::min(large, time_for(100000).first);
  CHECK(large < 3.0 * small + 1e-6);
}
