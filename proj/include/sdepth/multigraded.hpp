#ifndef SDEPTH_MULTIGRADED_HPP
#define SDEPTH_MULTIGRADED_HPP

// The finite grid poset of a quotient of monomial ideals under a bound g,
// its exact Stanley depth by brute-force search, and the constructive
// three-variable partition algorithm.

#include <optional>
#include <string>
#include <vector>

#include "sdepth/core.hpp"

namespace sdepth {

using Multidegree = std::vector<int>;

bool md_leq(const Multidegree& a, const Multidegree& b);
int alpha(const Multidegree& c, const Multidegree& g);  // #{i : c(i) = g(i)}

// Componentwise maximum of all generators (the canonical bound).
Multidegree default_bound(const std::vector<Multidegree>& gens_i,
                          const std::vector<Multidegree>& gens_j);

struct GridPoset {
  int n = 0;
  Multidegree g;
  std::vector<Multidegree> gens_i, gens_j;
  std::vector<Multidegree> points;  // ascending lexicographic order
};

// Points c with c <= g, c >= some generator of I, and c >= no generator
// of J. Generators must lie below g.
GridPoset build_quotient_poset(const std::vector<Multidegree>& gens_i,
                               const std::vector<Multidegree>& gens_j,
                               const Multidegree& g);

struct GridInterval {
  Multidegree lower, upper;
};

struct GridPartition {
  std::vector<GridInterval> intervals;
  int sdepth = 0;  // min over intervals of alpha(upper); n for empty
};

struct GridViolation {
  enum class Kind { overlap, escapes, uncovered, malformed };
  Kind kind;
  Multidegree witness;
};

std::optional<GridViolation> validate_grid_partition(const GridPartition& p,
                                                     const GridPoset& poset);

struct GridSdepthAnswer {
  int value = 0;
  GridPartition witness;
  bool empty_poset = false;  // value is n by convention
};

// Exact maximum over interval partitions of min alpha(upper). Guarded to
// posets with at most 5000 points.
GridSdepthAnswer grid_sdepth(const GridPoset& poset);

struct N3Construction {
  GridPartition partition;        // partition of the ideal-side poset
  std::vector<Multidegree> quotient_maximals;
  int alpha_m = 0;                // min alpha over quotient maximals
  std::vector<std::string> trace;
};

// Constructive partition of the ideal side for n = 3 whose Stanley depth
// strictly exceeds the alpha of every maximal point of the quotient side.
N3Construction n3_construct(const std::vector<Multidegree>& gens_i,
                            const Multidegree& g);

}  // namespace sdepth

#endif
