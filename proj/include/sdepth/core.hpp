#ifndef SDEPTH_CORE_HPP
#define SDEPTH_CORE_HPP

// Subset-lattice primitives: vertex sets as bitmasks over a ground set
// [n] with n <= 16, antichains, down/up closures, intervals, interval
// partitions and their validation, and f-vectors.

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace sdepth {

// A subset of [n]; vertex v (1-based) is bit v-1.
using Mask = std::uint32_t;

inline constexpr int max_ground = 16;

inline int set_size(Mask m) { return std::popcount(m); }
inline Mask full_mask(int n) { return n <= 0 ? 0u : ((Mask{1} << n) - 1u); }
inline bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }
inline bool comparable(Mask a, Mask b) { return subset_of(a, b) || subset_of(b, a); }

// Order used whenever sets are listed: cardinality first, then numeric value.
inline bool canonical_set_less(Mask a, Mask b) {
  const int ca = set_size(a), cb = set_size(b);
  return ca != cb ? ca < cb : a < b;
}

long long binom(int n, int k);

// Pairwise-incomparable family; members kept in canonical order.
struct Antichain {
  int n = 0;
  std::vector<Mask> members;

  bool operator==(const Antichain&) const = default;
  bool empty() const { return members.empty(); }
  int min_facet_size() const;
  int max_facet_size() const;
  bool pure() const;
  Mask support() const;   // union of members
  Mask common() const;    // intersection of members (0 when empty)
};

// Validates ground size, member range and incomparability. Throws
// std::invalid_argument on violation, naming the offending pair.
Antichain make_antichain(int n, std::vector<Mask> members);

enum class Role { down_set, up_set, general };

// A set of subsets of [n], stored as a flat bitset of length 2^n.
class SetFamily {
 public:
  SetFamily() = default;
  SetFamily(int n, Role role);

  int ground() const { return n_; }
  Role role() const { return role_; }
  bool contains(Mask m) const {
    return (words_[m >> 6] >> (m & 63u)) & 1u;
  }
  void insert(Mask m);
  void erase(Mask m);
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }
  std::vector<Mask> members() const;            // ascending mask value
  std::vector<Mask> members_canonical() const;  // (cardinality, numeric)
  bool operator==(const SetFamily& o) const {
    return n_ == o.n_ && words_ == o.words_;
  }

 private:
  int n_ = 0;
  Role role_ = Role::general;
  std::vector<std::uint64_t> words_ = std::vector<std::uint64_t>(1, 0);
  std::size_t count_ = 0;
};

struct Interval {
  Mask lower = 0;
  Mask upper = 0;
  // number of sets in the interval
  std::uint64_t size() const {
    return std::uint64_t{1} << (set_size(upper) - set_size(lower));
  }
};

Interval make_interval(Mask lower, Mask upper);  // checks lower <= upper

struct IntervalPartition {
  std::vector<Interval> intervals;
  // min over intervals of |upper|; nullopt for the empty partition
  std::optional<int> min_top_size() const;
};

// Face counts by cardinality; entries may go negative in criterion residuals.
struct FVector {
  std::vector<long long> counts;
  bool operator==(const FVector&) const = default;
};

SetFamily down_closure(const Antichain& facets);
SetFamily up_closure(const Antichain& gens);
SetFamily complement_upset(const Antichain& facets);
FVector f_vector(const SetFamily& family, int top);
Antichain maximal_elements(const SetFamily& family);
Antichain minimal_elements(const SetFamily& family);

struct PartitionViolation {
  enum class Kind { overlap, escapes, uncovered };
  Kind kind;
  Mask witness;
};

// nullopt means Ok: intervals are disjoint, stay inside the family, and
// cover it exactly.
std::optional<PartitionViolation> validate_partition(const IntervalPartition& p,
                                                     const SetFamily& family);

// Partition of 2^n - {} into n intervals [{k}, [k]], k = n..1.
IntervalPartition singleton_partition(int n);

}  // namespace sdepth

#endif
