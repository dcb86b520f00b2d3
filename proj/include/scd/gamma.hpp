#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "scd/digraph.hpp"

namespace scd {

/// Positions of a Gamma pattern [[1,1],[1,0]] in a simultaneously permuted
/// adjacency matrix: entries (row_lo,col_lo), (row_lo,col_hi), (row_hi,col_lo)
/// are 1 and (row_hi,col_hi) is 0, with row_lo < row_hi, col_lo < col_hi.
struct GammaWitness {
  int row_lo = 0, row_hi = 0, col_lo = 0, col_hi = 0;
  friend auto operator<=>(const GammaWitness&, const GammaWitness&) = default;
};

/// Scan the simultaneously permuted matrix for a Gamma submatrix.
/// Returns the lexicographically smallest (row_lo,row_hi,col_lo,col_hi)
/// witness, or nullopt if the ordering is Gamma-free.
std::optional<GammaWitness> gamma_witness(const Digraph& d, const VertexOrdering& ord);

/// Early-exit boolean form of gamma_witness.
bool is_gamma_free(const Digraph& d, const VertexOrdering& ord);

namespace detail {

/// Gamma scan over already-permuted rows (row i = permuted row, bits in
/// permuted column space). Shared by the digraph and matrix paths.
std::optional<GammaWitness> gamma_witness_rows(const std::vector<Bitset>& rows);

/// Rectangular variant: rows permuted by rperm, columns by cperm.
std::optional<GammaWitness> gamma_witness_matrix(const std::vector<Bitset>& rows,
                                                 int cols,
                                                 const std::vector<int>& rperm,
                                                 const std::vector<int>& cperm);

} // namespace detail

} // namespace scd
