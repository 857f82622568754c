#ifndef SDEPTH_CRITERIA_HPP
#define SDEPTH_CRITERIA_HPP

// The counting criterion for interval partitions with tops of a fixed
// size, its strong (link-wise) form, links, and the h-vector transform.

#include "sdepth/core.hpp"

namespace sdepth {

struct CriterionResult {
  bool pass = false;
  // residual vector after each absorption round; stops at the failing round
  std::vector<FVector> trace;
  // cardinality whose count first went negative (Fail only)
  int fail_index = -1;
};

// Absorption rounds i = 0..k: each remaining i-set becomes the bottom of an
// interval topped by a k-set, consuming binom(k-i, j-i) j-sets for j >= i.
// Pass iff no entry ever goes negative. Entries of f beyond index k are
// ignored; f must have at least k+1 entries.
CriterionResult combinatorial_criterion(const FVector& f, int k);

// h_j = sum_{i<=j} (-1)^{j-i} binom(d-i, j-i) f_i for j = 0..d.
std::vector<long long> h_vector(const FVector& f, int d);

// Facets of {S - face : face <= S in D[facets]} on the ground set
// [n - |face|], relabeled order-preservingly. face must lie in D[facets].
Antichain link(const Antichain& facets, Mask face);

struct SccResult {
  bool pass = true;
  Mask witness = 0;  // smallest failing face, canonical order (Fail only)
};

// The criterion applied to the link of every face of D[facets], at
// k = min facet size. Faces of size >= k can never fail and are skipped.
SccResult strong_cc(const Antichain& facets);

}  // namespace sdepth

#endif
