#include "sdepth/criteria.hpp"

#include <algorithm>

namespace sdepth {

CriterionResult combinatorial_criterion(const FVector& f, int k) {
  if (k < 0) throw std::invalid_argument("criterion: negative k");
  if (static_cast<int>(f.counts.size()) <= k)
    throw std::invalid_argument("criterion: k exceeds the top index of f");
  std::vector<long long> a(f.counts.begin(), f.counts.begin() + k + 1);
  CriterionResult res;
  for (int i = 0; i <= k; ++i) {
    const long long mult = a[i];
    for (int j = i; j <= k; ++j) a[j] -= mult * binom(k - i, j - i);
    res.trace.push_back(FVector{a});
    for (int j = 0; j <= k; ++j) {
      if (a[j] < 0) {
        res.pass = false;
        res.fail_index = j;
        return res;
      }
    }
  }
  res.pass = true;
  return res;
}

std::vector<long long> h_vector(const FVector& f, int d) {
  if (d < 0) throw std::invalid_argument("h_vector: negative dimension bound");
  std::vector<long long> h(d + 1, 0);
  for (int j = 0; j <= d; ++j) {
    long long v = 0;
    for (int i = 0; i <= j; ++i) {
      const long long fi = i < static_cast<int>(f.counts.size()) ? f.counts[i] : 0;
      const long long term = binom(d - i, j - i) * fi;
      v += ((j - i) % 2 == 0) ? term : -term;
    }
    h[j] = v;
  }
  return h;
}

Antichain link(const Antichain& facets, Mask face) {
  const SetFamily down = down_closure(facets);
  if (!down.contains(face))
    throw std::invalid_argument("link: face does not belong to the complex");
  // order-preserving relabel of the surviving vertices
  std::vector<int> newpos(facets.n, -1);
  int next = 0;
  for (int v = 0; v < facets.n; ++v)
    if (!(face & (Mask{1} << v))) newpos[v] = next++;
  std::vector<Mask> out;
  for (Mask f : facets.members) {
    if (!subset_of(face, f)) continue;
    Mask rest = f & ~face, img = 0;
    while (rest) {
      const int v = std::countr_zero(rest);
      rest &= rest - 1;
      img |= Mask{1} << newpos[v];
    }
    out.push_back(img);
  }
  // distinct facets above the face stay incomparable after removing it
  return make_antichain(facets.n - set_size(face), std::move(out));
}

SccResult strong_cc(const Antichain& facets) {
  if (facets.empty())
    throw std::invalid_argument("strong_cc: empty antichain");
  const int k = facets.min_facet_size();
  const SetFamily down = down_closure(facets);
  const auto faces = down.members_canonical();
  for (Mask face : faces) {
    const int fs = set_size(face);
    if (fs >= k) continue;
    // f-vector of the link without building it: count supersets by size
    FVector lf;
    lf.counts.assign(k - fs + 1, 0);
    for (Mask s : faces)
      if (subset_of(face, s) && set_size(s) - fs <= k - fs)
        ++lf.counts[set_size(s) - fs];
    if (!combinatorial_criterion(lf, k - fs).pass)
      return SccResult{false, face};
  }
  return SccResult{true, 0};
}

}  // namespace sdepth
