#include "scd/gamma.hpp"

namespace scd {

namespace detail {

std::optional<GammaWitness> gamma_witness_rows(const std::vector<Bitset>& rows) {
  int n = int(rows.size());
  for (int i = 0; i < n; ++i) {
    if (rows[i].none()) continue;
    for (int j = i + 1; j < n; ++j) {
      Bitset both = bit_and(rows[i], rows[j]);
      if (both.none()) continue;
      Bitset zero = bit_and_not(rows[i], rows[j]);
      int zlast = zero.last();
      if (zlast == -1) continue;
      // smallest col_lo with a 0-column above it, then its smallest col_hi
      for (int cl = both.first(); cl != -1 && cl < zlast; cl = both.next(cl)) {
        int ch = zero.next(cl);
        if (ch != -1) return GammaWitness{i, j, cl, ch};
      }
    }
  }
  return std::nullopt;
}

std::optional<GammaWitness> gamma_witness_matrix(const std::vector<Bitset>& rows,
                                                 int cols,
                                                 const std::vector<int>& rperm,
                                                 const std::vector<int>& cperm) {
  std::vector<Bitset> permuted(rperm.size(), Bitset(cols));
  for (size_t i = 0; i < rperm.size(); ++i) {
    const Bitset& src = rows[rperm[i]];
    for (size_t j = 0; j < cperm.size(); ++j)
      if (src.test(cperm[j])) permuted[i].set(int(j));
  }
  return gamma_witness_rows(permuted);
}

} // namespace detail

std::optional<GammaWitness> gamma_witness(const Digraph& d, const VertexOrdering& ord) {
  if (!ord.valid_for(d.n()))
    throw contract_error("gamma_witness: ordering is not a permutation of the vertices");
  int n = d.n();
  std::vector<Bitset> permuted(n, Bitset(n));
  for (int i = 0; i < n; ++i) {
    const Bitset& src = d.out_row(ord.order[i]);
    for (int j = 0; j < n; ++j)
      if (src.test(ord.order[j])) permuted[i].set(j);
  }
  return detail::gamma_witness_rows(permuted);
}

bool is_gamma_free(const Digraph& d, const VertexOrdering& ord) {
  return !gamma_witness(d, ord).has_value();
}

} // namespace scd
