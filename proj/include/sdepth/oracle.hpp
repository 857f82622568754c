#ifndef SDEPTH_ORACLE_HPP
#define SDEPTH_ORACLE_HPP

// Exhaustive reference for the solver: maximizes the minimum top size
// over ALL interval partitions of a family by dynamic programming on
// covered states. No pruning, no fixed top size, no shared search code.
// Guarded to ground sets of size at most 4.

#include "sdepth/core.hpp"

namespace sdepth {

int naive_sdepth(const SetFamily& family);

}  // namespace sdepth

#endif
