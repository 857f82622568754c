#include "sdepth/solver.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <queue>

#include "sdepth/criteria.hpp"

namespace sdepth {

namespace {

// Bounded transposition table over covered-state bitsets. Two-way
// set-associative; the least recently touched entry of a set is evicted.
// Only used when the state fits four words (n <= 8), which covers every
// desk-scale search.
class TransTable {
 public:
  explicit TransTable(std::size_t slots, std::size_t words)
      : words_(words), enabled_(words <= 4 && slots >= 2) {
    if (enabled_) {
      sets_ = std::bit_ceil(slots) / 2;
      entries_.assign(sets_ * 2, Entry{});
    }
  }

  bool contains(const std::vector<std::uint64_t>& state) {
    if (!enabled_) return false;
    const std::size_t h = hash(state);
    Entry* set = &entries_[(h & (sets_ - 1)) * 2];
    for (int i = 0; i < 2; ++i) {
      if (set[i].used && set[i].hash == h && equal(set[i], state)) {
        set[i].recent = true;
        set[1 - i].recent = false;
        return true;
      }
    }
    return false;
  }

  void insert(const std::vector<std::uint64_t>& state) {
    if (!enabled_) return;
    const std::size_t h = hash(state);
    Entry* set = &entries_[(h & (sets_ - 1)) * 2];
    Entry* victim = !set[0].used ? &set[0] : !set[1].used ? &set[1]
                    : set[0].recent       ? &set[1]
                                          : &set[0];
    victim->used = true;
    victim->recent = true;
    victim->hash = h;
    std::copy(state.begin(), state.end(), victim->key.begin());
    Entry* other = victim == &set[0] ? &set[1] : &set[0];
    other->recent = false;
  }

 private:
  struct Entry {
    std::array<std::uint64_t, 4> key{};
    std::size_t hash = 0;
    bool used = false;
    bool recent = false;
  };

  static std::size_t hash(const std::vector<std::uint64_t>& state) {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (auto w : state) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdull;
    }
    return h;
  }

  bool equal(const Entry& e, const std::vector<std::uint64_t>& state) const {
    for (std::size_t i = 0; i < words_; ++i)
      if (e.key[i] != state[i]) return false;
    return true;
  }

  std::size_t words_ = 0;
  std::size_t sets_ = 0;
  bool enabled_ = false;
  std::vector<Entry> entries_;
};

struct Search {
  const SetFamily& fam;
  int n, k;
  SolverOptions opts;
  std::vector<Mask> smalls;               // members of size < k, canonical order
  std::vector<std::vector<Mask>> tops;    // per small: size-k members containing it
  std::vector<std::uint64_t> covered;
  std::vector<long long> counts;          // residual f-vector, sizes 0..k
  std::vector<Interval> placed;
  std::vector<Mask> cube_buf;
  TransTable memo;
  std::uint64_t nodes = 0;

  Search(const SetFamily& f, int k_, const SolverOptions& o)
      : fam(f),
        n(f.ground()),
        k(k_),
        opts(o),
        covered(((std::size_t{1} << n) + 63) / 64, 0),
        memo(o.memo_slots, ((std::size_t{1} << n) + 63) / 64) {}

  bool is_covered(Mask m) const { return (covered[m >> 6] >> (m & 63u)) & 1u; }
  void set_covered(Mask m) { covered[m >> 6] |= std::uint64_t{1} << (m & 63u); }
  void clr_covered(Mask m) { covered[m >> 6] &= ~(std::uint64_t{1} << (m & 63u)); }

  // All cube elements must be family members and uncovered; fills cube_buf.
  bool cube_free(Mask lo, Mask hi) {
    cube_buf.clear();
    const Mask diff = hi & ~lo;
    Mask t = 0;
    for (;;) {
      const Mask c = lo | t;
      if (!fam.contains(c) || is_covered(c)) return false;
      cube_buf.push_back(c);
      if (t == diff) break;
      t = (t - diff) & diff;
    }
    return true;
  }

  bool criterion_ok() const {
    return combinatorial_criterion(FVector{counts}, k).pass;
  }

  // Criterion on the residual link of every uncovered member below k.
  bool links_ok() const {
    for (Mask a : smalls) {
      if (is_covered(a)) continue;
      const int as = set_size(a);
      std::vector<long long> lf(k - as + 1, 0);
      const Mask rest = full_mask(n) & ~a;
      Mask t = 0;
      for (;;) {
        const Mask s = a | t;
        const int d = set_size(s) - as;
        if (d <= k - as && fam.contains(s) && !is_covered(s)) ++lf[d];
        if (t == rest) break;
        t = (t - rest) & rest;
      }
      if (!combinatorial_criterion(FVector{lf}, k - as).pass) return false;
    }
    return true;
  }

  bool run(std::size_t lo) {
    ++nodes;
    while (lo < smalls.size() && is_covered(smalls[lo])) ++lo;
    if (lo == smalls.size()) return true;
    if (memo.contains(covered)) return false;
    const Mask s = smalls[lo];
    for (Mask top : tops[lo]) {
      if (!cube_free(s, top)) continue;
      const auto cube = cube_buf;
      for (Mask c : cube) {
        set_covered(c);
        --counts[set_size(c)];
      }
      placed.push_back(Interval{s, top});
      const bool viable = criterion_ok() && (!opts.scc_prune || links_ok());
      if (viable && run(lo)) return true;
      placed.pop_back();
      for (Mask c : cube) {
        clr_covered(c);
        ++counts[set_size(c)];
      }
    }
    memo.insert(covered);
    return false;
  }
};

}  // namespace

DecideResult decide_sdepth_at_least(const SetFamily& family, int k,
                                    const SolverOptions& opts) {
  DecideResult result;
  const int n = family.ground();
  if (k > n) return result;  // impossible outright
  if (k < 0) k = 0;

  Search search(family, k, opts);
  const auto mem = family.members_canonical();
  std::vector<Mask> ksets;
  for (Mask m : mem) {
    const int c = set_size(m);
    if (c < k) search.smalls.push_back(m);
    if (c == k) ksets.push_back(m);
  }
  search.counts.assign(k + 1, 0);
  for (Mask m : mem)
    if (set_size(m) <= k) ++search.counts[set_size(m)];

  search.tops.resize(search.smalls.size());
  for (std::size_t i = 0; i < search.smalls.size(); ++i) {
    for (Mask t : ksets)
      if (subset_of(search.smalls[i], t)) search.tops[i].push_back(t);
    if (search.tops[i].empty()) {
      result.nodes = 1;
      return result;  // some member below k has no admissible top
    }
  }
  if (!search.criterion_ok() || (opts.scc_prune && !search.links_ok())) {
    result.nodes = 1;
    return result;
  }

  if (!search.run(0)) {
    result.nodes = search.nodes;
    return result;
  }

  IntervalPartition p;
  p.intervals = search.placed;
  for (Mask m : mem)
    if (!search.is_covered(m)) p.intervals.push_back(Interval{m, m});
  result.witness = std::move(p);
  result.nodes = search.nodes;
  return result;
}

SdepthAnswer sdepth(const SetFamily& family, const SolverOptions& opts) {
  SdepthAnswer ans;
  if (family.empty()) {
    ans.value = family.ground();
    ans.empty_family = true;
    return ans;
  }
  // every maximal member tops its own interval, which caps the search
  int cap = family.ground();
  for (Mask m : maximal_elements(family).members)
    cap = std::min(cap, set_size(m));

  auto base = decide_sdepth_at_least(family, 0, opts);
  ans.node_count += base.nodes;
  ans.witness = std::move(*base.witness);
  ans.value = 0;
  for (int k = 1; k <= cap; ++k) {
    auto r = decide_sdepth_at_least(family, k, opts);
    ans.node_count += r.nodes;
    if (!r.witness) break;
    ans.value = k;
    ans.witness = std::move(*r.witness);
  }
  return ans;
}

bool matching_cover(const Antichain& facets, int k) {
  const SetFamily upset = complement_upset(facets);
  std::vector<Mask> lefts, rights;
  for (Mask m : upset.members()) {
    const int c = set_size(m);
    if (c == k) lefts.push_back(m);
    if (c == k + 1) rights.push_back(m);
  }
  if (lefts.empty()) return true;

  std::vector<int> right_index(std::size_t{1} << facets.n, -1);
  for (std::size_t i = 0; i < rights.size(); ++i) right_index[rights[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> adj(lefts.size());
  for (std::size_t i = 0; i < lefts.size(); ++i)
    for (int v = 0; v < facets.n; ++v) {
      const Mask up = lefts[i] | (Mask{1} << v);
      if (up != lefts[i] && right_index[up] >= 0) adj[i].push_back(right_index[up]);
    }

  // Hopcroft-Karp
  const int L = static_cast<int>(lefts.size());
  const int R = static_cast<int>(rights.size());
  std::vector<int> match_l(L, -1), match_r(R, -1), dist(L, -1);
  auto bfs = [&]() {
    std::queue<int> q;
    bool found = false;
    for (int u = 0; u < L; ++u) {
      dist[u] = match_l[u] < 0 ? 0 : -1;
      if (match_l[u] < 0) q.push(u);
    }
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v : adj[u]) {
        const int w = match_r[v];
        if (w < 0)
          found = true;
        else if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
      }
    }
    return found;
  };
  std::function<bool(int)> dfs = [&](int u) {
    for (int v : adj[u]) {
      const int w = match_r[v];
      if (w < 0 || (dist[w] == dist[u] + 1 && dfs(w))) {
        match_l[u] = v;
        match_r[v] = u;
        return true;
      }
    }
    dist[u] = -1;
    return false;
  };
  int matched = 0;
  while (bfs())
    for (int u = 0; u < L; ++u)
      if (match_l[u] < 0 && dfs(u)) ++matched;
  return matched == L;
}

}  // namespace sdepth
