#ifndef SDEPTH_CANONICAL_HPP
#define SDEPTH_CANONICAL_HPP

// Canonical labeling of antichains: the relabeling minimizing the
// canonically ordered member list over all n! vertex permutations.
// Equal canonical forms characterize isomorphism.

#include <cstdint>
#include <string>
#include <vector>

#include "sdepth/core.hpp"

namespace sdepth {

// Requires n <= 8.
Antichain canonical_form(const Antichain& facets);

// Compact string key for hashing by isomorphism type: canonical form of
// the support-restricted antichain (ambient isolated vertices do not
// change the family the members span).
std::string canonical_key(const Antichain& facets);

// Internals shared with the hypergraph enumerator. Edge-index tables for
// uniform antichains on n <= 7 so a relabeling is one pass over set bits.
struct UniformTables {
  int n = 0, k = 0;
  std::vector<Mask> edges;                         // ascending mask value
  std::vector<int> edge_index;                     // mask -> index
  std::vector<std::vector<std::uint8_t>> perms;    // [perm][edge] -> edge

  std::uint64_t relabel(std::uint64_t eset, std::size_t perm) const;
};

const UniformTables& uniform_tables(int n, int k);

// Member-list order on uniform edge sets with equal edge counts: compare
// lowest differing edge index.
inline bool edgeset_less(std::uint64_t a, std::uint64_t b) {
  if (a == b) return false;
  const int i = std::countr_zero(a ^ b);
  return (a >> i) & 1u;
}

bool edgeset_is_canonical(const UniformTables& t, std::uint64_t eset);
std::uint64_t edgeset_canonical(const UniformTables& t, std::uint64_t eset);

}  // namespace sdepth

#endif
