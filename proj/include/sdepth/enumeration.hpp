#ifndef SDEPTH_ENUMERATION_HPP
#define SDEPTH_ENUMERATION_HPP

// Generation of k-uniform hypergraphs on [n] up to isomorphism, the
// classification pipeline, and census / gap reports.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sdepth/canonical.hpp"
#include "sdepth/core.hpp"
#include "sdepth/reductions.hpp"

namespace sdepth {

// One isomorphism class per entry, each the canonical representative,
// encoded as a bitmask over the k-subsets of [n] in ascending order.
struct UniformEnumeration {
  int n = 0, k = 0;
  std::vector<Mask> edges;
  std::vector<std::uint64_t> classes;

  Antichain expand(std::uint64_t eset) const;
};

// Every nonempty k-uniform edge set on [n] up to isomorphism, each exactly
// once. Exhaustive bitmask filter when C(n,k) <= 22, canonical-augmentation
// growth otherwise. Requires k <= n <= 7.
UniformEnumeration enumerate_uniform(int n, int k, int jobs = 1);

// Both strategies, exposed for the completeness cross-check.
std::vector<std::uint64_t> enumerate_masks_exhaustive(int n, int k, int jobs);
std::vector<std::uint64_t> enumerate_masks_augmented(int n, int k, int jobs);

enum class Category { bad_degree, fail_scc, splits, sdepth_ok, counterexample };
const char* category_name(Category c);

struct ClassificationRecord {
  Antichain canon;
  int n = 0, k = 0;
  Category category = Category::bad_degree;
  std::optional<int> split_vertex;
  std::optional<IntervalPartition> witness;  // sdepth_ok only
  std::string detail;                        // bad-degree / scc witness
  double millis = 0;
};

// Pipeline order: bad degree, strong criterion, splitting, then the exact
// search for an ideal-side partition at k+1.
ClassificationRecord classify(const Antichain& facets, int k,
                              SplitMode mode = SplitMode::exact,
                              SdepthCache* cache = nullptr);

struct CensusOptions {
  int jobs = 1;
  bool long_running = false;   // opens the heavy (n, k) pairs
  bool include_empty = false;  // count the empty edge set as bad degree
  SplitMode mode = SplitMode::exact;
  std::string jsonl_path;      // stream one record per line when nonempty
  bool sort_records = false;   // canonical enumeration order in the file
};

struct CensusReport {
  int n = 0, k = 0;
  SplitMode mode = SplitMode::exact;
  bool include_empty = false;
  long long total = 0, bad_degree = 0, fail_scc = 0, splits = 0, sdepth_ok = 0,
            counterexamples = 0;

  bool operator==(const CensusReport&) const = default;
};

CensusReport run_census(int n, int k, const CensusOptions& opts = {},
                        SdepthCache* cache = nullptr);

struct GapReport {
  int n = 0, k = 0;
  // (sdepth of the quotient side, sdepth of the ideal side) -> count
  std::map<std::pair<int, int>, long long> cells;
  long long total = 0;
};

GapReport gap_census(int n, int k, const CensusOptions& opts = {},
                     SdepthCache* cache = nullptr);

std::string gap_to_csv(const GapReport& gap);

}  // namespace sdepth

#endif
