#include "sdepth/oracle.hpp"

#include <algorithm>

namespace sdepth {

namespace {

constexpr int kTopSentinel = 127;

struct Dp {
  std::vector<Mask> mem;             // ascending mask value
  std::vector<int> index;            // mask -> position in mem
  std::vector<signed char> memo;     // covered-state -> best min-top
  std::uint32_t full = 0;

  int best_from(std::uint32_t state) {
    if (state == full) return kTopSentinel;
    if (memo[state] != -2) return memo[state];
    std::size_t first = 0;
    while (state & (std::uint32_t{1} << first)) ++first;
    const Mask m = mem[first];
    int best = -1;
    // every interval [a, b] whose cube contains m, lies in the family,
    // and misses everything already covered
    for (Mask b : mem) {
      if (!subset_of(m, b)) continue;
      Mask a = m;
      for (;;) {  // submasks of m
        std::uint32_t cube = 0;
        bool ok = true;
        const Mask diff = b & ~a;
        Mask t = 0;
        for (;;) {
          const Mask c = a | t;
          const int idx = index[c];
          if (idx < 0 || (state & (std::uint32_t{1} << idx))) {
            ok = false;
            break;
          }
          cube |= std::uint32_t{1} << idx;
          if (t == diff) break;
          t = (t - diff) & diff;
        }
        if (ok) {
          const int v = std::min(set_size(b), best_from(state | cube));
          best = std::max(best, v);
        }
        if (a == 0) break;
        a = (a - 1) & m;
      }
    }
    memo[state] = static_cast<signed char>(best);
    return best;
  }
};

}  // namespace

int naive_sdepth(const SetFamily& family) {
  if (family.ground() > 4)
    throw std::invalid_argument("naive_sdepth: guarded to n <= 4");
  if (family.empty()) return family.ground();

  Dp dp;
  dp.mem = family.members();
  dp.index.assign(std::size_t{1} << family.ground(), -1);
  for (std::size_t i = 0; i < dp.mem.size(); ++i)
    dp.index[dp.mem[i]] = static_cast<int>(i);
  dp.full = dp.mem.size() == 32 ? ~std::uint32_t{0}
                                : (std::uint32_t{1} << dp.mem.size()) - 1;
  dp.memo.assign(std::size_t{1} << dp.mem.size(), -2);
  return dp.best_from(0);
}

}  // namespace sdepth
