#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "scd/gamma.hpp"
#include "scd/obstructions.hpp"
#include "scd/recognition.hpp"
#include "scd/tournaments.hpp"

using namespace scd;
using namespace scd::test;

TEST_CASE("is_tournament") {
  CHECK(is_tournament(generate({.id = FamilyId::TTn, .n = 3})));
  CHECK_FALSE(is_tournament(sym_graph(2, {{0, 1}})));
  CHECK(is_tournament(Digraph::build(1, {{0, 0}})));
}

TEST_CASE("classifier on the documented examples") {
  Digraph rtt4 = generate({.id = FamilyId::TTn, .n = 4, .loop_set = {0, 1, 2, 3}});
  TournamentClass a = classify_tournament(rtt4);
  CHECK(a.kind == TournamentClass::Kind::ReflexiveTransitive);
  CHECK(a.n == 4);
  REQUIRE(a.ordering.has_value());
  CHECK(is_gamma_free(rtt4, *a.ordering));

  Digraph tts5 = generate({.id = FamilyId::TTstar, .n = 5});
  TournamentClass b = classify_tournament(tts5);
  CHECK(b.kind == TournamentClass::Kind::IrrBlowup);
  CHECK(b.n == 1);
  CHECK(b.i == 1);
  CHECK(b.k == 5);

  Digraph t6 = generate({.id = FamilyId::T6});
  TournamentClass c = classify_tournament(t6);
  CHECK(c.kind == TournamentClass::Kind::NotStronglyChordal);
  REQUIRE(c.obstruction.has_value());
  CHECK(c.obstruction->spec.id == FamilyId::T6);

  // every irreflexive tournament on <= 4 vertices is strongly chordal
  for (int n = 1; n <= 4; ++n) {
    uint64_t codes = uint64_t(1) << tournament_code_bits(n);
    for (uint64_t code = 0; code < codes; ++code) {
      Digraph t = tournament_from_code(n, code);
      CAPTURE(n);
      CAPTURE(code);
      CHECK(classify_tournament(t).accepted());
    }
  }
}

TEST_CASE("classifier agrees with the oracle (exhaustive n <= 5, loops n <= 4)") {
  for (int n = 1; n <= 5; ++n) {
    uint64_t codes = uint64_t(1) << tournament_code_bits(n);
    for (uint64_t code = 0; code < codes; ++code) {
      Digraph t = tournament_from_code(n, code);
      TournamentClass tc = classify_tournament(t);
      bool oracle = brute_force_strongly_chordal(t, 9, Exec::Serial).has_value();
      CAPTURE(n);
      CAPTURE(code);
      REQUIRE(tc.accepted() == oracle);
      if (tc.accepted()) REQUIRE(is_gamma_free(t, *tc.ordering));
    }
  }
  for (int n = 1; n <= 4; ++n) {
    uint64_t codes = uint64_t(1) << tournament_code_bits(n);
    for (uint64_t code = 0; code < codes; ++code)
      for (uint64_t loops = 0; loops < (uint64_t(1) << n); ++loops) {
        Digraph t = tournament_from_code(n, code, loops);
        TournamentClass tc = classify_tournament(t);
        bool oracle = brute_force_strongly_chordal(t, 9, Exec::Serial).has_value();
        CAPTURE(n);
        CAPTURE(code);
        CAPTURE(loops);
        REQUIRE(tc.accepted() == oracle);
        if (tc.accepted()) REQUIRE(is_gamma_free(t, *tc.ordering));
      }
  }
}

TEST_CASE("strongly connected acceptance means TT*") {
  std::mt19937_64 rng(11);
  Digraph tts5 = generate({.id = FamilyId::TTstar, .n = 5});
  for (uint64_t code = 0; code < (uint64_t(1) << 10); ++code) {
    Digraph t = tournament_from_code(5, code);
    int comps = 0;
    strong_components(t, &comps);
    if (comps != 1) continue;
    bool accepted = classify_tournament(t).accepted();
    CHECK(accepted == isomorphic(t, tts5));
  }
}

TEST_CASE("adding a source or sink preserves acceptance") {
  std::mt19937_64 rng(12);
  int tested = 0;
  while (tested < 80) {
    int n = 2 + int(rng() % 4);
    uint64_t code = rng() & ((uint64_t(1) << tournament_code_bits(n)) - 1);
    uint64_t loops = rng() & ((uint64_t(1) << n) - 1);
    Digraph t = tournament_from_code(n, code, loops);
    if (!classify_tournament(t).accepted()) continue;
    ++tested;
    Digraph ext(n + 1);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (t.arc(u, v)) ext.add_arc(u, v);
    bool source = rng() & 1;
    bool with_loop = rng() & 1;
    for (int v = 0; v < n; ++v)
      if (source)
        ext.add_arc(n, v);
      else
        ext.add_arc(v, n);
    if (with_loop) ext.add_arc(n, n);
    // a new source or sink can join no directed cycle and no strong 4-set,
    // so acceptance must survive regardless of its loop
    CHECK(classify_tournament(ext).accepted());
    CHECK(brute_force_strongly_chordal(ext, 9).has_value());
  }
}

TEST_CASE("TT* core loop rules match the oracle exactly") {
  // accepted iff the reflexive subset is acyclic and the two reversed-arc
  // endpoints are not both reflexive (endpoints are vertices 0 and k-1 of
  // the canonical TT*_k)
  for (int k = 3; k <= 6; ++k) {
    Digraph base = generate({.id = FamilyId::TTstar, .n = k});
    for (uint64_t loops = 0; loops < (uint64_t(1) << k); ++loops) {
      Digraph t = base;
      for (int v = 0; v < k; ++v)
        if (loops >> v & 1) t.add_arc(v, v);
      bool endpoints = (loops & 1) && (loops >> (k - 1) & 1);
      bool cyclic = false;
      // every directed cycle of TT*_k runs through both endpoints
      if (k == 3)
        cyclic = loops == 7;
      else
        cyclic = endpoints && (loops & ~(1ull | (1ull << (k - 1))));
      bool rules = !cyclic && !(k >= 4 && endpoints);
      CAPTURE(k);
      CAPTURE(loops);
      CHECK(rules == brute_force_strongly_chordal(t, 9, Exec::Serial).has_value());
      CHECK(rules == classify_tournament(t).accepted());
    }
  }
}

TEST_CASE("loop decorations can rescue a non-blowup core") {
  // regression table for the T1 landscape: rejected exactly for the empty
  // set, any set containing the special vertex, the in-pair, the out-pair,
  // and the union of both pairs
  Digraph t1 = generate({.id = FamilyId::T1});
  for (uint64_t loops = 0; loops < 32; ++loops) {
    Digraph t = t1;
    for (int v = 0; v < 5; ++v)
      if (loops >> v & 1) t.add_arc(v, v);
    bool rejected_expected = loops == 0 || (loops >> 4 & 1) || loops == 0b00011 ||
                             loops == 0b01100 || loops == 0b01111;
    bool oracle = brute_force_strongly_chordal(t, 9, Exec::Serial).has_value();
    TournamentClass tc = classify_tournament(t);
    CAPTURE(loops);
    CHECK(oracle == !rejected_expected);
    CHECK(tc.accepted() == oracle);
    if (tc.accepted() && !t.is_irreflexive())
      CHECK(tc.kind == TournamentClass::Kind::MixedNonBlowup);
    if (!tc.accepted()) {
      REQUIRE(tc.obstruction.has_value());
      // the certificate member itself must be rejected
      auto sub = induced(t, tc.obstruction->embedding);
      CHECK_FALSE(brute_force_strongly_chordal(sub.graph, 9, Exec::Serial).has_value());
    }
  }
}

TEST_CASE("cross-validation sweep beyond the small exhaustive ranges") {
  std::mt19937_64 rng(424242);
  for (int t = 0; t < 300; ++t) {
    int n = 7 + int(rng() % 2);
    uint64_t code = rng() & ((1ull << tournament_code_bits(n)) - 1);
    uint64_t loops = rng() & ((1ull << n) - 1);
    Digraph d = tournament_from_code(n, code, loops);
    TournamentClass tc = classify_tournament(d);
    bool oracle = brute_force_strongly_chordal(d, 9, Exec::Serial).has_value();
    CAPTURE(n);
    CAPTURE(code);
    CAPTURE(loops);
    REQUIRE(tc.accepted() == oracle);
    if (tc.accepted()) REQUIRE(is_gamma_free(d, *tc.ordering));
  }
}

TEST_CASE("rescued cores keep their chain extensions") {
  // an accepted loop-decorated non-blowup core stays accepted after adding
  // dominating/dominated vertices, and the classifier still proves it
  Digraph t1 = generate({.id = FamilyId::T1});
  t1.add_arc(0, 0);  // this decoration is strongly chordal, so generate()
                     // rightly refuses it as an obstruction parameter
  CHECK_THROWS_AS((generate({.id = FamilyId::T1, .loop_set = {0}})), input_error);
  REQUIRE(brute_force_strongly_chordal(t1, 9, Exec::Serial).has_value());
  Digraph ext(7);
  for (int u = 0; u < 5; ++u)
    for (int v = 0; v < 5; ++v)
      if (t1.arc(u, v)) ext.add_arc(u, v);
  for (int v = 0; v < 5; ++v) ext.add_arc(5, v);  // new source
  ext.add_arc(5, 6);
  for (int v = 0; v < 5; ++v) ext.add_arc(v, 6);  // new sink, reflexive
  ext.add_arc(6, 6);
  TournamentClass tc = classify_tournament(ext);
  REQUIRE(tc.accepted());
  CHECK(tc.kind == TournamentClass::Kind::MixedNonBlowup);
  CHECK(is_gamma_free(ext, *tc.ordering));

  // blowup parameters are recovered exactly
  Digraph bl = generate({.id = FamilyId::TTblowup, .n = 4, .i = 2, .k = 3});
  TournamentClass tb = classify_tournament(bl);
  CHECK(tb.kind == TournamentClass::Kind::IrrBlowup);
  CHECK(tb.n == 4);
  CHECK(tb.i == 2);
  CHECK(tb.k == 3);
}
