#pragma once

#include <optional>

#include "scd/certificates.hpp"
#include "scd/digraph.hpp"
#include "scd/gamma.hpp"

namespace scd {

/// Simple vertex of a symmetric digraph: the neighbourhoods of its
/// neighbours form a chain under inclusion. Neighbourhoods contain the
/// vertex itself exactly when it has a loop.
bool is_simple_vertex_sym(const Digraph& g, int v);

/// Simplicial vertex of a digraph: arc u->w for every in-neighbour u and
/// out-neighbour w (literally quantified, so u=w asks for a loop).
bool is_simplicial_digraph(const Digraph& d, int v);

/// Simple vertex of a digraph: in-neighbours' out-neighbourhoods form a
/// chain under inclusion and out-neighbours' in-neighbourhoods form a
/// chain. The first vertex of any strong ordering is simple in this sense,
/// and on symmetric digraphs it coincides with is_simple_vertex_sym.
bool is_simple_vertex_digraph(const Digraph& d, int v);

/// Peak vertex: some u,w with u->v, v->w, u->w all present.
bool is_peak(const Digraph& d, int v);

/// Per-step trace of the symmetric elimination, for property tests.
struct SymEliminationAudit {
  struct Step {
    std::vector<int> alive;
    std::vector<std::pair<int, int>> relations;  // x strictly below y
    std::vector<int> simple_vertices;
    std::vector<int> candidates;  // simple and poset-minimal
    int chosen = -1;
  };
  std::vector<Step> steps;
};

/// Recognition engine for symmetric digraphs (graphs with possible loops).
/// Repeatedly removes a simple vertex that is minimal in the accumulated
/// strict-containment order (lowest id among ties); the removal order is a
/// strong ordering when elimination completes. Returns UnwitnessedCert on
/// rejection; obstruction upgrade lives in obstructions.hpp.
Certificate strong_order_symmetric(const Digraph& g, SymEliminationAudit* audit = nullptr);

/// Alias of gamma_witness with strong-ordering vocabulary.
std::optional<GammaWitness> verify_strong_ordering(const Digraph& d, const VertexOrdering& ord);

enum class Exec { Serial, Parallel };

/// Factorial oracle: tries all n! simultaneous permutations in
/// lexicographic order and returns the first Gamma-free one. Guarded by
/// n_limit (default 9). The parallel variant shards by first vertex and
/// reconciles to the same lexicographically-first answer as the serial one.
std::optional<VertexOrdering> brute_force_strongly_chordal(const Digraph& d, int n_limit = 9,
                                                           Exec exec = Exec::Parallel);

/// Greedy simple-vertex elimination for arbitrary digraphs, lowest-id
/// tie-break. A completed ordering does NOT imply strong chordality.
std::optional<VertexOrdering> simple_ordering_digraph(const Digraph& d);

namespace detail {

bool is_simplicial_digraph_masked(const Digraph& d, const Digraph& dT, int v, const Bitset& alive);
bool is_simple_vertex_digraph_masked(const Digraph& d, const Digraph& dT, int v, const Bitset& alive);

} // namespace detail

} // namespace scd
