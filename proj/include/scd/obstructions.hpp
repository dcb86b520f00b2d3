#pragma once

#include <optional>
#include <vector>

#include "scd/certificates.hpp"
#include "scd/digraph.hpp"

namespace scd {

/// Canonical labelled member of a forbidden (or reference) family.
/// Throws input_error when parameters violate the family's constraints.
Digraph generate(const FamilySpec& spec);

/// All members of one family with at most max_size vertices, in the
/// deterministic enumeration order used by the obstruction search.
std::vector<FamilySpec> enumerate_family(FamilyId id, int max_size);

/// Parameters under which g is isomorphic (loops included) to a member of
/// the family, or nullopt.
std::optional<FamilySpec> is_member_of_family(const Digraph& g, FamilyId id);

/// Lexicographically-first induced embedding of `pattern` in `host`
/// (embedding[i] = host vertex playing pattern vertex i), or nullopt.
std::optional<std::vector<int>> find_induced_embedding(const Digraph& host,
                                                       const Digraph& pattern);

enum class ObSearchStatus { Found, Absent, Exhausted };

struct ObstructionSearch {
  ObSearchStatus status = ObSearchStatus::Absent;
  std::optional<ObstructionCert> certificate;
};

/// Deterministic obstruction search for a rejected symmetric digraph:
/// families F1..F9 in order, members by ascending size then parameters,
/// lexicographically-first embedding. `budget` bounds the member size; a
/// budget >= g.n() makes the search complete (Absent then asserts that no
/// member embeds), otherwise a miss reports Exhausted.
ObstructionSearch find_obstruction_sym(const Digraph& g, int budget);

/// Minimal obstruction inside a rejected tournament with possible loops:
/// reflexive directed triangles (size 3), T0 (size 4), then T1..T5 and T6
/// with whatever loops they carry. Subset search is complete for these
/// bounded sizes; combination_guard refuses absurd hosts.
std::optional<ObstructionCert> find_obstruction_tournament(const Digraph& t,
                                                           long long combination_guard = 4000000);

/// strong_order_symmetric with rejections upgraded to obstruction
/// certificates when a witness within `budget` vertices exists.
Certificate recognize_symmetric(const Digraph& g, int budget);

} // namespace scd
