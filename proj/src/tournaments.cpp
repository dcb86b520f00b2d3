#include "scd/tournaments.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "scd/gamma.hpp"
#include "scd/obstructions.hpp"
#include "scd/recognition.hpp"

namespace scd {

bool is_tournament(const Digraph& d) {
  for (int u = 0; u < d.n(); ++u)
    for (int v = u + 1; v < d.n(); ++v)
      if (d.arc(u, v) == d.arc(v, u)) return false;
  return true;
}

namespace {

Digraph strip_loops(const Digraph& d) {
  Digraph s = d;
  for (int v = 0; v < s.n(); ++v) s.remove_arc(v, v);
  return s;
}

// transitive tournaments have pairwise distinct out-degrees
std::optional<std::vector<int>> transitive_order(const Digraph& t) {
  int n = t.n();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return t.out_row(a).count() > t.out_row(b).count(); });
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (!t.arc(order[a], order[b])) return std::nullopt;
  return order;
}

// TT*_k: reversing the arc leaving the unique out-degree-1 candidate yields
// a transitive tournament; returns the base order v_1..v_k with the
// reversed arc running v_k -> v_1.
std::optional<std::vector<int>> tt_star_order(const Digraph& t) {
  int k = t.n();
  if (k < 3) return std::nullopt;
  for (int a = 0; a < k; ++a) {
    if (t.out_row(a).count() != 1) continue;
    int b = t.out_row(a).first();
    Digraph flip = t;
    flip.remove_arc(a, b);
    flip.add_arc(b, a);
    if (auto ord = transitive_order(flip)) {
      if (ord->front() == b && ord->back() == a) return ord;
    }
  }
  return std::nullopt;
}

bool reflexive_set_acyclic(const Digraph& t) {
  std::vector<int> ref;
  for (int v = 0; v < t.n(); ++v)
    if (t.has_loop(v)) ref.push_back(v);
  auto sub = induced(t, ref);
  int comps = 0;
  auto comp = strong_components(sub.graph, &comps);
  std::vector<int> size(comps, 0);
  for (int v = 0; v < sub.graph.n(); ++v)
    if (++size[comp[v]] >= 2) return false;
  return true;
}

} // namespace

std::optional<BlowupStructure> recover_blowup_structure(const Digraph& t) {
  if (!is_tournament(t) || !t.is_irreflexive()) return std::nullopt;
  int comps = 0;
  auto comp = strong_components(t, &comps);
  std::vector<std::vector<int>> members(comps);
  for (int v = 0; v < t.n(); ++v) members[comp[v]].push_back(v);

  // condensation of a tournament is a transitive tournament; order the
  // components by dominance (all arcs from earlier to later)
  std::vector<int> comp_order(comps);
  std::iota(comp_order.begin(), comp_order.end(), 0);
  std::sort(comp_order.begin(), comp_order.end(), [&](int a, int b) {
    if (a == b) return false;
    return t.arc(members[a][0], members[b][0]);
  });
  for (int p = 0; p < comps; ++p)
    for (int q = p + 1; q < comps; ++q)
      for (int a : members[comp_order[p]])
        for (int b : members[comp_order[q]])
          if (!t.arc(a, b)) return std::nullopt;

  BlowupStructure bs;
  bs.n = comps;
  bs.position_of.assign(t.n(), 0);
  bs.singletons.assign(comps, -1);
  int big = -1;
  for (int p = 0; p < comps; ++p) {
    const auto& m = members[comp_order[p]];
    for (int v : m) bs.position_of[v] = p + 1;
    if (int(m.size()) > 1) {
      if (big != -1) return std::nullopt;  // two non-trivial strong components
      big = p;
    } else {
      bs.singletons[p] = m[0];
    }
  }
  if (big == -1) {
    bs.i = 1;
    bs.k = 1;
    return bs;
  }
  auto sub = induced(t, members[comp_order[big]]);
  auto core = tt_star_order(sub.graph);
  if (!core) return std::nullopt;
  bs.i = big + 1;
  bs.k = sub.graph.n();
  for (int local : *core) bs.core_order.push_back(sub.vertices[local]);
  return bs;
}

namespace {

// chain singletons are appended outward from the core, nearest first; each
// is a source or sink of everything already placed, so an ordering that is
// gamma-free on the core stays gamma-free
std::vector<int> append_chain(int big_position, int positions,
                              const std::vector<int>& singletons,
                              const std::vector<int>& core) {
  std::vector<int> order = core;
  for (int p = big_position - 1; p >= 1; --p) order.push_back(singletons[p - 1]);
  for (int p = big_position + 1; p <= positions; ++p) order.push_back(singletons[p - 1]);
  return order;
}

// candidate gamma-free orders of a TT*_k core with loops: the transitive
// base order, reversed when its first vertex carries a loop; the directed
// triangle additionally rotates to start at a loop-free vertex
std::vector<std::vector<int>> core_order_candidates(const Digraph& t,
                                                    const std::vector<int>& core_order) {
  std::vector<std::vector<int>> out;
  int k = int(core_order.size());
  if (k == 3) {
    const auto& c = core_order;
    for (int r = 0; r < 3; ++r) {
      std::vector<int> rot = {c[r], c[(r + 1) % 3], c[(r + 2) % 3]};
      if (!t.has_loop(rot[0])) out.push_back(rot);
    }
    for (int r = 0; r < 3; ++r)
      out.push_back({c[r], c[(r + 2) % 3], c[(r + 1) % 3]});
  } else {
    std::vector<int> base = core_order;
    std::vector<int> rev(base.rbegin(), base.rend());
    if (t.has_loop(base.front())) std::swap(base, rev);
    out.push_back(base);
    out.push_back(rev);
  }
  return out;
}

// Strong components of the loop-stripped tournament, arranged as
// condensation positions. Unlike recover_blowup_structure this never fails
// on a tournament: the core may be any strong tournament.
struct Condensation {
  int positions = 0;
  int big_position = 0;              // 0 when every component is a singleton
  std::vector<int> core_vertices;    // ascending ids
  std::vector<int> singletons;       // per position, -1 at the core slot
  bool two_big = false;
};

Condensation condense(const Digraph& t) {
  int comps = 0;
  auto comp = strong_components(t, &comps);
  std::vector<std::vector<int>> members(comps);
  for (int v = 0; v < t.n(); ++v) members[comp[v]].push_back(v);
  std::vector<int> comp_order(comps);
  std::iota(comp_order.begin(), comp_order.end(), 0);
  std::sort(comp_order.begin(), comp_order.end(), [&](int a, int b) {
    if (a == b) return false;
    return t.arc(members[a][0], members[b][0]);
  });
  Condensation c;
  c.positions = comps;
  c.singletons.assign(comps, -1);
  for (int p = 0; p < comps; ++p) {
    const auto& m = members[comp_order[p]];
    if (int(m.size()) > 1) {
      if (c.big_position != 0) c.two_big = true;
      c.big_position = p + 1;
      c.core_vertices = m;
    } else {
      c.singletons[p] = m[0];
    }
  }
  return c;
}

} // namespace

TournamentClass classify_tournament(const Digraph& t) {
  if (!is_tournament(t)) throw contract_error("classify_tournament requires a tournament");
  TournamentClass out;
  out.n = t.n();
  for (int v = 0; v < t.n(); ++v)
    if (t.has_loop(v)) out.loop_set.push_back(v);

  auto reject = [&](const std::string& note) {
    out.kind = TournamentClass::Kind::NotStronglyChordal;
    try {
      out.obstruction = find_obstruction_tournament(t);
      if (!out.obstruction) out.note = "rejected; no bounded obstruction found: " + note;
    } catch (const guard_error& e) {
      out.note = std::string("obstruction search skipped: ") + e.what();
    }
    return out;
  };

  Digraph stripped = strip_loops(t);
  Condensation cond = condense(stripped);
  if (cond.two_big) return reject("two non-trivial strong components");

  // acceptance depends only on the non-trivial strong component: chain
  // singletons are sources/sinks and peel off regardless of their loops
  std::vector<int> core_order;  // TT* base order, when the core is a TT*
  int k = int(cond.core_vertices.size());
  bool core_accept = false;
  bool core_is_blowup = false;
  std::optional<VertexOrdering> core_oracle_order;

  if (k == 0) {
    core_accept = true;
    core_is_blowup = true;
  } else {
    auto sub = induced(stripped, cond.core_vertices);
    if (auto tts = tt_star_order(sub.graph)) {
      core_is_blowup = true;
      for (int local : *tts) core_order.push_back(sub.vertices[local]);
      auto core_full = induced(t, cond.core_vertices);
      bool acyclic = reflexive_set_acyclic(core_full.graph);
      bool t0 = k >= 4 && t.has_loop(core_order.front()) && t.has_loop(core_order.back());
      core_accept = acyclic && !t0;
    } else if (k <= 9) {
      // the structural theory is incomplete here: some loop patterns make a
      // non-TT* core strongly chordal, so decide the core exactly
      auto core_full = induced(t, cond.core_vertices);
      auto ord = brute_force_strongly_chordal(core_full.graph, 9);
      if (ord) {
        core_accept = true;
        VertexOrdering mapped;
        for (int local : ord->order) mapped.order.push_back(core_full.vertices[local]);
        core_oracle_order = mapped;
      }
    } else {
      auto core_full = induced(t, cond.core_vertices);
      if (core_full.graph.is_irreflexive())
        return reject("strong irreflexive core is not a reversed-arc transitive tournament");
      // mixed cores beyond the oracle bound: the structural theory is
      // incomplete, so the rejection carries an explicit caveat
      return reject("mixed core exceeds the exact-decision bound (9); verdict rests on "
                    "structural rules known to be incomplete");
    }
  }

  if (!core_accept) return reject("core is not strongly chordal");

  // assemble and verify the ordering
  std::vector<std::vector<int>> candidates;
  if (core_oracle_order)
    candidates.push_back(core_oracle_order->order);
  else if (k > 0)
    candidates = core_order_candidates(t, core_order);
  else
    candidates.push_back({});
  int big_pos = cond.big_position == 0 ? 1 : cond.big_position;
  std::optional<VertexOrdering> ord;
  for (const auto& core : candidates) {
    std::vector<int> full;
    if (cond.big_position == 0) {
      // pure transitive chain: position order with whatever loops
      for (int p = 1; p <= cond.positions; ++p) full.push_back(cond.singletons[p - 1]);
    } else {
      full = append_chain(big_pos, cond.positions, cond.singletons, core);
    }
    VertexOrdering cand{full};
    if (is_gamma_free(t, cand)) {
      ord = cand;
      break;
    }
  }
  if (!ord && t.n() <= 9) ord = brute_force_strongly_chordal(t, 9);
  if (!ord)
    throw std::logic_error("tournament classifier: accepted structure but no ordering "
                           "verified (n=" + std::to_string(t.n()) + ")");

  out.ordering = ord;
  out.i = cond.big_position == 0 ? 1 : cond.big_position;
  out.k = std::max(k, 1);
  out.n = cond.positions;
  if (!core_is_blowup) {
    out.kind = TournamentClass::Kind::MixedNonBlowup;
    out.note = "strongly chordal, but the strong component is not a reversed-arc "
               "transitive tournament (outside the blowup family)";
  } else if (t.is_reflexive() && k == 0)
    out.kind = TournamentClass::Kind::ReflexiveTransitive;
  else if (t.is_irreflexive())
    out.kind = TournamentClass::Kind::IrrBlowup;
  else
    out.kind = TournamentClass::Kind::MixedBlowup;
  return out;
}

} // namespace scd
