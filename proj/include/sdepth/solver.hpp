#ifndef SDEPTH_SOLVER_HPP
#define SDEPTH_SOLVER_HPP

// Exact Stanley depth of a subset family by backtracking search over
// interval partitions, plus the bipartite-matching certificate.

#include "sdepth/core.hpp"

namespace sdepth {

struct SolverOptions {
  // second-level prune: run the criterion on the links of the residual
  bool scc_prune = false;
  // slots in the bounded transposition table (two-way, LRU within a set)
  std::size_t memo_slots = 1 << 14;
};

struct DecideResult {
  // a partition in which every member smaller than k sits below a size-k
  // top and everything else is a trivial interval; nullopt when the
  // search exhausted without finding one
  std::optional<IntervalPartition> witness;
  std::uint64_t nodes = 0;
};

DecideResult decide_sdepth_at_least(const SetFamily& family, int k,
                                    const SolverOptions& opts = {});

struct SdepthAnswer {
  int value = 0;
  IntervalPartition witness;
  std::uint64_t node_count = 0;
  // empty poset: value is the ground-set size by convention
  bool empty_family = false;
};

SdepthAnswer sdepth(const SetFamily& family, const SolverOptions& opts = {});

// True iff a complete matching exists from the k-sets of the complement
// up-set of `facets` into its (k+1)-sets (Hopcroft-Karp).
bool matching_cover(const Antichain& facets, int k);

}  // namespace sdepth

#endif
