#ifndef SDEPTH_REDUCTIONS_HPP
#define SDEPTH_REDUCTIONS_HPP

// Minimal-counterexample reductions (degree tests, purification, coning),
// and the vertex splitting test.

#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

#include "sdepth/core.hpp"

namespace sdepth {

struct ReductionReport {
  bool bad_degree = false;
  std::optional<int> uncovered_vertex;  // 1-based, smallest
  std::optional<int> common_vertex;     // 1-based, smallest
  bool pure = false;
  int k = 0;  // min facet size
};

ReductionReport bad_degree(const Antichain& facets);

// All k-subsets of the facets; k must not exceed the min facet size.
Antichain purify(const Antichain& facets, int k);
// Convenience wrapper: k = sdepth of the down set.
Antichain purify_auto(const Antichain& facets);

// Removes x (which must lie in every facet) and relabels to [n-1].
Antichain delete_common_vertex(const Antichain& facets, int x);

// Drops vertices lying in no facet; relabels order-preservingly.
Antichain restrict_support(const Antichain& facets);

// True iff every facet has size n-1.
bool corollary_n1(const Antichain& facets);

// How condition (ii) of the splitting test is evaluated:
//   exact     - compare exact Stanley depths of the two down sets
//   criterion - the reduced antichain must satisfy the strong criterion
enum class SplitMode { exact, criterion };

const char* split_mode_name(SplitMode m);
std::optional<SplitMode> split_mode_from(const std::string& name);

// Thread-safe memo of exact Stanley depths keyed by canonical form.
class SdepthCache {
 public:
  int down_set_sdepth(const Antichain& facets);
  int ideal_sdepth(const Antichain& facets);  // complement up-set side

 private:
  int lookup(std::unordered_map<std::string, int>& map, const std::string& key,
             const Antichain& facets, bool ideal_side);

  std::mutex mu_;
  std::unordered_map<std::string, int> down_, ideal_;
};

bool splits_over(const Antichain& facets, int x, SplitMode mode = SplitMode::exact,
                 SdepthCache* cache = nullptr);

// Smallest vertex the antichain splits over, if any.
std::optional<int> splits(const Antichain& facets, SplitMode mode = SplitMode::exact,
                          SdepthCache* cache = nullptr);

struct ReduceStep {
  std::string rule;  // restrict_support | delete_common_vertex | purify
  int detail = 0;    // deleted vertex or purification size
  Antichain result;
};

struct ReduceTrace {
  std::vector<ReduceStep> steps;
  Antichain result;
};

// Applies restrict_support / delete_common_vertex / purify until none of
// them changes the antichain.
ReduceTrace reduce_to_fixpoint(const Antichain& facets);

}  // namespace sdepth

#endif
