#include "sdepth/canonical.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace sdepth {

namespace {

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Mask relabel_mask(Mask m, const std::vector<int>& p) {
  Mask out = 0;
  while (m) {
    const int v = std::countr_zero(m);
    m &= m - 1;
    out |= Mask{1} << p[v];
  }
  return out;
}

bool member_list_less(const std::vector<Mask>& a, const std::vector<Mask>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      canonical_set_less);
}

}  // namespace

std::uint64_t UniformTables::relabel(std::uint64_t eset, std::size_t perm) const {
  const auto& map = perms[perm];
  std::uint64_t out = 0;
  while (eset) {
    const int e = std::countr_zero(eset);
    eset &= eset - 1;
    out |= std::uint64_t{1} << map[e];
  }
  return out;
}

const UniformTables& uniform_tables(int n, int k) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, UniformTables> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({n, k});
  if (it != cache.end()) return it->second;

  if (n < 1 || n > 7 || k < 1 || k > n)
    throw std::invalid_argument("uniform_tables: need 1 <= k <= n <= 7");
  UniformTables t;
  t.n = n;
  t.k = k;
  for (Mask m = 0; m <= full_mask(n); ++m)
    if (set_size(m) == k) t.edges.push_back(m);
  t.edge_index.assign(std::size_t{1} << n, -1);
  for (std::size_t i = 0; i < t.edges.size(); ++i)
    t.edge_index[t.edges[i]] = static_cast<int>(i);
  for (const auto& p : all_permutations(n)) {
    std::vector<std::uint8_t> em(t.edges.size());
    for (std::size_t e = 0; e < t.edges.size(); ++e)
      em[e] = static_cast<std::uint8_t>(t.edge_index[relabel_mask(t.edges[e], p)]);
    t.perms.push_back(std::move(em));
  }
  return cache.emplace(std::make_pair(n, k), std::move(t)).first->second;
}

bool edgeset_is_canonical(const UniformTables& t, std::uint64_t eset) {
  for (std::size_t p = 1; p < t.perms.size(); ++p)  // perms[0] is the identity
    if (edgeset_less(t.relabel(eset, p), eset)) return false;
  return true;
}

std::uint64_t edgeset_canonical(const UniformTables& t, std::uint64_t eset) {
  std::uint64_t best = eset;
  for (std::size_t p = 1; p < t.perms.size(); ++p) {
    const std::uint64_t r = t.relabel(eset, p);
    if (edgeset_less(r, best)) best = r;
  }
  return best;
}

Antichain canonical_form(const Antichain& facets) {
  if (facets.n > 8)
    throw std::invalid_argument("canonical_form: guarded to n <= 8");
  if (facets.members.empty()) return facets;

  if (facets.n <= 7 && facets.pure() && facets.min_facet_size() >= 1) {
    const auto& t = uniform_tables(facets.n, facets.min_facet_size());
    std::uint64_t eset = 0;
    for (Mask m : facets.members) eset |= std::uint64_t{1} << t.edge_index[m];
    const std::uint64_t canon = edgeset_canonical(t, eset);
    std::vector<Mask> out;
    std::uint64_t rest = canon;
    while (rest) {
      out.push_back(t.edges[std::countr_zero(rest)]);
      rest &= rest - 1;
    }
    return make_antichain(facets.n, std::move(out));
  }

  std::vector<Mask> best = facets.members;
  std::vector<Mask> cur(facets.members.size());
  for (const auto& p : all_permutations(facets.n)) {
    for (std::size_t i = 0; i < facets.members.size(); ++i)
      cur[i] = relabel_mask(facets.members[i], p);
    std::sort(cur.begin(), cur.end(), canonical_set_less);
    if (member_list_less(cur, best)) best = cur;
  }
  return make_antichain(facets.n, std::move(best));
}

std::string canonical_key(const Antichain& facets) {
  // restricting the support first keeps the key independent of the
  // ambient ground-set size and shrinks the permutation group
  Mask support = facets.support();
  std::vector<int> newpos(facets.n, -1);
  int next = 0;
  for (int v = 0; v < facets.n; ++v)
    if (support & (Mask{1} << v)) newpos[v] = next++;
  std::vector<Mask> moved;
  for (Mask m : facets.members) {
    Mask out = 0, rest = m;
    while (rest) {
      const int v = std::countr_zero(rest);
      rest &= rest - 1;
      out |= Mask{1} << newpos[v];
    }
    moved.push_back(out);
  }
  const Antichain canon = canonical_form(make_antichain(next, std::move(moved)));
  std::string key = std::to_string(canon.n);
  for (Mask m : canon.members) {
    key += ':';
    key += std::to_string(m);
  }
  return key;
}

}  // namespace sdepth
