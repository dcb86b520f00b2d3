#pragma once

#include <optional>
#include <vector>

#include "scd/certificates.hpp"
#include "scd/digraph.hpp"

namespace scd {

/// Exactly one arc between every pair of distinct vertices; loops free.
bool is_tournament(const Digraph& d);

/// Shape of a (possibly loop-decorated) tournament whose underlying
/// irreflexive tournament is a transitive tournament with at most one
/// position blown up into a reversed-arc transitive tournament.
/// positions: n condensation positions in dominance order, blowup at
/// position i (1-based) of size k (k = 1 means plain transitive).
/// core_order lists the blown-up component in its transitive base order
/// (reversed arc runs from the last entry to the first).
struct BlowupStructure {
  int n = 0, i = 1, k = 1;
  std::vector<int> position_of;   // vertex -> condensation position (1-based)
  std::vector<int> core_order;    // empty when k == 1
  std::vector<int> singletons;    // position p (1-based) -> vertex, -1 at the blowup slot
};

/// Recover the blowup structure of an irreflexive tournament, or nullopt
/// when the tournament is not of that shape.
std::optional<BlowupStructure> recover_blowup_structure(const Digraph& t);

struct TournamentClass {
  // MixedNonBlowup: strongly chordal with loops although the non-trivial
  // strong component is not a reversed-arc transitive tournament; such
  // tournaments exist (certain loop-decorated 5-vertex cores) even though
  // the blowup shapes are the only irreflexive possibilities.
  enum class Kind {
    ReflexiveTransitive,
    IrrBlowup,
    MixedBlowup,
    MixedNonBlowup,
    NotStronglyChordal
  };
  Kind kind = Kind::NotStronglyChordal;
  int n = 0, i = 0, k = 0;              // blowup parameters when accepted
  std::vector<int> loop_set;            // reflexive vertices (host labels)
  std::optional<VertexOrdering> ordering;       // verified strong ordering on acceptance
  std::optional<ObstructionCert> obstruction;   // witness on rejection, when found
  std::string note;                      // e.g. why no obstruction is attached

  bool accepted() const { return kind != Kind::NotStronglyChordal; }
};

/// Classifier for tournaments with possible loops. Chain singletons peel
/// off (acceptance depends only on the non-trivial strong component); a
/// TT*_k core is accepted iff its reflexive set is acyclic and the two
/// reversed-arc endpoints do not both carry loops, any other core is
/// decided exactly by the factorial oracle while it has at most 9 vertices.
/// Every acceptance carries a gamma-verified strong ordering, every
/// rejection an obstruction certificate when the subset search is within
/// budget.
TournamentClass classify_tournament(const Digraph& t);

} // namespace scd
