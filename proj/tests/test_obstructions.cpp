#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "scd/balanced.hpp"
#include "scd/obstructions.hpp"
#include "scd/recognition.hpp"
#include "scd/tournaments.hpp"

using namespace scd;
using namespace scd::test;

TEST_CASE("generators produce the documented members") {
  Digraph f1 = generate({.id = FamilyId::F1, .length = 4});
  CHECK(f1 == sym_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, {0, 1, 2, 3}));

  Digraph f9 = generate({.id = FamilyId::F9, .length = 2});
  CHECK(f9 == sym_graph(3, {{0, 1}, {1, 2}}, {0, 2}));

  Digraph sun = generate({.id = FamilyId::F8, .k = 3});
  CHECK(sun.n() == 6);
  for (int v = 0; v < 6; ++v) CHECK(sun.has_loop(v));
  for (int i = 0; i < 3; ++i) {
    int y = 3 + i;
    CHECK(neighbours(sun, y).count() == 3);  // two core vertices plus the loop
    CHECK(sun.arc(y, i));
    CHECK(sun.arc(y, (i + 1) % 3));
  }

  Digraph tts = generate({.id = FamilyId::TTstar, .n = 5});
  CHECK(tts.arc(4, 0));
  CHECK_FALSE(tts.arc(0, 4));
  CHECK(tts.arc(1, 4));

  Digraph fence = generate({.id = FamilyId::Fence, .length = 6});
  for (int v = 0; v < 6; v += 2) {
    CHECK(fence.arc(v, (v + 1) % 6));
    CHECK(fence.arc((v + 2) % 6, (v + 1) % 6));
  }

  CHECK_THROWS_AS(generate({.id = FamilyId::F1, .length = 3}), input_error);
  CHECK_THROWS_AS(generate({.id = FamilyId::F2, .length = 4}), input_error);
  CHECK_THROWS_AS(generate({.id = FamilyId::F5, .length = 7}), input_error);
  CHECK_THROWS_AS((generate({.id = FamilyId::F8, .k = 3, .loopless_rim = {0},
                             .matching = {{0, 1}}})),
                  input_error);
}

TEST_CASE("family membership") {
  CHECK(is_member_of_family(generate({.id = FamilyId::F1, .length = 5}), FamilyId::F1)
            .has_value());
  Digraph c4 = sym_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  for (int f = int(FamilyId::F1); f <= int(FamilyId::F9); ++f)
    CHECK_FALSE(is_member_of_family(c4, FamilyId(f)).has_value());
  CHECK(is_member_of_family(generate({.id = FamilyId::T6}), FamilyId::T6).has_value());

  // relabelled members are still recognized
  Digraph f9 = sym_graph(3, {{2, 1}, {1, 0}}, {2, 0});
  auto spec = is_member_of_family(f9, FamilyId::F9);
  REQUIRE(spec.has_value());
  CHECK(spec->length == 2);
}

TEST_CASE("every generated family member is rejected") {
  const int cap = 9;  // acceptance pushes this to 12
  for (int f = int(FamilyId::F1); f <= int(FamilyId::F9); ++f) {
    for (const auto& spec : enumerate_family(FamilyId(f), cap)) {
      Digraph g = generate(spec);
      CAPTURE(to_string(spec));
      CHECK_FALSE(certificate_accepts(strong_order_symmetric(g)));
    }
  }
  for (int f = int(FamilyId::T0); f <= int(FamilyId::T6); ++f)
    CHECK_FALSE(brute_force_strongly_chordal(generate({.id = FamilyId(f)})).has_value());
  CHECK_FALSE(
      brute_force_strongly_chordal(generate({.id = FamilyId::ReflexiveTriangle})).has_value());
  for (int len = 6; len <= 10; len += 2)
    CHECK_FALSE(certificate_accepts(
        strongly_chordal_balanced(generate({.id = FamilyId::Fence, .length = len}))));
}

TEST_CASE("fixed-size obstructions are minimal") {
  auto minimal = [](const Digraph& g, auto&& accept) {
    for (int v = 0; v < g.n(); ++v) {
      std::vector<int> keep;
      for (int u = 0; u < g.n(); ++u)
        if (u != v) keep.push_back(u);
      if (!accept(induced(g, keep).graph)) return false;
    }
    return true;
  };
  auto sym_accept = [](const Digraph& g) {
    return certificate_accepts(strong_order_symmetric(g));
  };
  auto oracle_accept = [](const Digraph& g) {
    return brute_force_strongly_chordal(g).has_value();
  };

  CHECK(minimal(generate({.id = FamilyId::F1, .length = 4}), sym_accept));
  CHECK(minimal(generate({.id = FamilyId::F2, .length = 3}), sym_accept));
  CHECK(minimal(generate({.id = FamilyId::F3, .length = 5}), sym_accept));
  CHECK(minimal(generate({.id = FamilyId::F4, .length = 5}), sym_accept));
  CHECK(minimal(generate({.id = FamilyId::F5, .length = 6}), sym_accept));
  CHECK(minimal(generate({.id = FamilyId::F6, .length = 5}), sym_accept));
  CHECK(minimal(generate({.id = FamilyId::F7, .length = 5}), sym_accept));
  CHECK(minimal(generate({.id = FamilyId::F8, .k = 3}), sym_accept));
  CHECK(minimal(generate({.id = FamilyId::F9, .length = 2}), sym_accept));
  for (int f = int(FamilyId::T0); f <= int(FamilyId::T6); ++f)
    CHECK(minimal(generate({.id = FamilyId(f)}), oracle_accept));
  CHECK(minimal(generate({.id = FamilyId::ReflexiveTriangle}), oracle_accept));
}

TEST_CASE("symmetric obstruction search examples") {
  Digraph path4 = generate({.id = FamilyId::F9, .length = 4});
  auto r1 = find_obstruction_sym(path4, path4.n());
  REQUIRE(r1.status == ObSearchStatus::Found);
  CHECK(r1.certificate->spec.id == FamilyId::F9);
  auto sub = induced(path4, r1.certificate->embedding);
  CHECK(is_member_of_family(sub.graph, FamilyId::F9).has_value());

  Digraph rc4 = generate({.id = FamilyId::F1, .length = 4});
  auto r2 = find_obstruction_sym(rc4, 4);
  REQUIRE(r2.status == ObSearchStatus::Found);
  CHECK(r2.certificate->spec.id == FamilyId::F1);
  CHECK(r2.certificate->spec.length == 4);
  std::vector<int> emb = r2.certificate->embedding;
  std::sort(emb.begin(), emb.end());
  CHECK(emb == std::vector<int>{0, 1, 2, 3});

  Digraph sun = generate({.id = FamilyId::F8, .k = 3});
  auto r3 = find_obstruction_sym(sun, 6);
  REQUIRE(r3.status == ObSearchStatus::Found);
  CHECK(r3.certificate->spec.id == FamilyId::F8);
}

TEST_CASE("obstruction search is complete on rejected symmetric graphs (n <= 5)") {
  for (int n = 1; n <= 5; ++n) {
    uint64_t codes = uint64_t(1) << sym_code_bits(n);
    for (uint64_t code = 0; code < codes; ++code) {
      Digraph g = sym_from_code(n, code);
      if (certificate_accepts(strong_order_symmetric(g))) continue;
      auto r = find_obstruction_sym(g, n);
      REQUIRE(r.status == ObSearchStatus::Found);
      // certificate round-trip
      auto sub = induced(g, r.certificate->embedding);
      CHECK(is_member_of_family(sub.graph, r.certificate->spec.id).has_value());
    }
  }
}

TEST_CASE("tournament obstruction search") {
  Digraph t0 = generate({.id = FamilyId::T0});
  auto r0 = find_obstruction_tournament(t0);
  REQUIRE(r0.has_value());
  CHECK(r0->spec.id == FamilyId::T0);
  CHECK(r0->embedding.size() == 4);

  Digraph rt = generate({.id = FamilyId::ReflexiveTriangle});
  auto r1 = find_obstruction_tournament(rt);
  REQUIRE(r1.has_value());
  CHECK(r1->spec.id == FamilyId::ReflexiveTriangle);

  // loops at both reversed-arc endpoints of TT*_6 create a T0
  Digraph bad = generate({.id = FamilyId::TTstar, .n = 6, .loop_set = {0, 5}});
  auto r2 = find_obstruction_tournament(bad);
  REQUIRE(r2.has_value());
  CHECK(r2->spec.id == FamilyId::T0);
  auto sub = induced(bad, r2->embedding);
  CHECK(is_member_of_family(sub.graph, FamilyId::T0).has_value());
}

TEST_CASE("recognize_symmetric upgrades rejections") {
  Digraph rc4 = generate({.id = FamilyId::F1, .length = 4});
  Certificate c = recognize_symmetric(rc4, 4);
  REQUIRE(std::holds_alternative<ObstructionCert>(c));
  // with a tiny budget the rejection stays unwitnessed but decided
  Certificate c2 = recognize_symmetric(rc4, 3);
  CHECK(std::holds_alternative<UnwitnessedCert>(c2));
}

TEST_CASE("obstruction certificates stay sound on larger rejected hosts") {
  std::mt19937_64 rng(515151);
  int rejected = 0;
  while (rejected < 120) {
    int n = 7 + int(rng() % 2);
    Digraph g = random_symmetric(n, rng, 0.45, 0.5);
    if (certificate_accepts(strong_order_symmetric(g))) continue;
    ++rejected;
    auto r = find_obstruction_sym(g, n);
    REQUIRE(r.status == ObSearchStatus::Found);
    auto sub = induced(g, r.certificate->embedding);
    CHECK(is_member_of_family(sub.graph, r.certificate->spec.id).has_value());
    CHECK_FALSE(brute_force_strongly_chordal(sub.graph, 9, Exec::Serial).has_value());
  }
}
