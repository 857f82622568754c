#include "sdepth/reductions.hpp"

#include <algorithm>

#include "sdepth/canonical.hpp"
#include "sdepth/criteria.hpp"
#include "sdepth/solver.hpp"

namespace sdepth {

ReductionReport bad_degree(const Antichain& facets) {
  if (facets.empty()) throw std::invalid_argument("bad_degree: empty antichain");
  ReductionReport r;
  const Mask support = facets.support();
  const Mask common = facets.common();
  for (int v = 0; v < facets.n; ++v) {
    if (!(support & (Mask{1} << v))) {
      r.uncovered_vertex = v + 1;
      break;
    }
  }
  if (common) r.common_vertex = std::countr_zero(common) + 1;
  r.bad_degree = r.uncovered_vertex.has_value() || r.common_vertex.has_value();
  r.pure = facets.pure();
  r.k = facets.min_facet_size();
  return r;
}

Antichain purify(const Antichain& facets, int k) {
  if (facets.empty()) throw std::invalid_argument("purify: empty antichain");
  if (k > facets.min_facet_size())
    throw std::invalid_argument("purify: k exceeds the minimum facet size");
  if (k < 0) throw std::invalid_argument("purify: negative k");
  std::vector<Mask> out;
  for (Mask f : facets.members) {
    Mask s = f;
    for (;;) {
      if (set_size(s) == k) out.push_back(s);
      if (s == 0) break;
      s = (s - 1) & f;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return make_antichain(facets.n, std::move(out));
}

Antichain purify_auto(const Antichain& facets) {
  return purify(facets, sdepth(down_closure(facets)).value);
}

Antichain delete_common_vertex(const Antichain& facets, int x) {
  const Mask bit = Mask{1} << (x - 1);
  if (x < 1 || x > facets.n)
    throw std::invalid_argument("delete_common_vertex: vertex out of range");
  for (Mask f : facets.members)
    if (!(f & bit))
      throw std::invalid_argument("delete_common_vertex: vertex missing from a facet");
  std::vector<Mask> out;
  for (Mask f : facets.members) {
    const Mask low = f & (bit - 1);
    const Mask high = f & ~(bit | (bit - 1));
    out.push_back(low | (high >> 1));
  }
  return make_antichain(facets.n - 1, std::move(out));
}

Antichain restrict_support(const Antichain& facets) {
  const Mask support = facets.support();
  std::vector<int> newpos(facets.n, -1);
  int next = 0;
  for (int v = 0; v < facets.n; ++v)
    if (support & (Mask{1} << v)) newpos[v] = next++;
  std::vector<Mask> out;
  for (Mask f : facets.members) {
    Mask img = 0, rest = f;
    while (rest) {
      const int v = std::countr_zero(rest);
      rest &= rest - 1;
      img |= Mask{1} << newpos[v];
    }
    out.push_back(img);
  }
  return make_antichain(next, std::move(out));
}

bool corollary_n1(const Antichain& facets) {
  if (facets.empty()) return false;
  for (Mask f : facets.members)
    if (set_size(f) != facets.n - 1) return false;
  return true;
}

const char* split_mode_name(SplitMode m) {
  return m == SplitMode::exact ? "exact" : "criterion";
}

std::optional<SplitMode> split_mode_from(const std::string& name) {
  if (name == "exact") return SplitMode::exact;
  if (name == "criterion") return SplitMode::criterion;
  return std::nullopt;
}

int SdepthCache::lookup(std::unordered_map<std::string, int>& map,
                        const std::string& key, const Antichain& facets,
                        bool ideal_side) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = map.find(key);
    if (it != map.end()) return it->second;
  }
  const SetFamily fam =
      ideal_side ? complement_upset(facets) : down_closure(facets);
  const int value = sdepth(fam).value;
  std::lock_guard<std::mutex> lock(mu_);
  return map.emplace(key, value).first->second;
}

int SdepthCache::down_set_sdepth(const Antichain& facets) {
  if (facets.empty()) return facets.n;  // empty poset convention
  return lookup(down_, canonical_key(facets), facets, false);
}

int SdepthCache::ideal_sdepth(const Antichain& facets) {
  // the complement depends on the ambient ground set, so n joins the key
  return lookup(ideal_, std::to_string(facets.n) + "#" + canonical_key(facets),
                facets, true);
}

bool splits_over(const Antichain& facets, int x, SplitMode mode,
                 SdepthCache* cache) {
  if (facets.empty()) throw std::invalid_argument("splits_over: empty antichain");
  if (x < 1 || x > facets.n)
    throw std::invalid_argument("splits_over: vertex out of range");
  const Mask bit = Mask{1} << (x - 1);

  std::vector<Mask> with, without;
  for (Mask f : facets.members) (f & bit ? with : without).push_back(f);
  if (with.empty()) return true;  // (i) vacuous, (ii) an equality

  // (i): every facet through x, minus x, must survive inside another facet
  for (Mask f : with) {
    const Mask s = f & ~bit;
    bool inside = false;
    for (Mask t : without)
      if (subset_of(s, t)) { inside = true; break; }
    if (!inside) return false;
  }
  if (without.empty()) return false;  // unreachable: (i) fails first

  const Antichain rest = make_antichain(facets.n, std::move(without));
  if (mode == SplitMode::criterion) return strong_cc(rest).pass;

  SdepthCache local;
  SdepthCache& c = cache ? *cache : local;
  return c.down_set_sdepth(rest) >= c.down_set_sdepth(facets);
}

std::optional<int> splits(const Antichain& facets, SplitMode mode,
                          SdepthCache* cache) {
  SdepthCache local;
  SdepthCache& c = cache ? *cache : local;
  for (int x = 1; x <= facets.n; ++x)
    if (splits_over(facets, x, mode, &c)) return x;
  return std::nullopt;
}

ReduceTrace reduce_to_fixpoint(const Antichain& facets) {
  ReduceTrace trace;
  Antichain cur = facets;
  for (;;) {
    if (cur.empty()) break;
    const ReductionReport r = bad_degree(cur);
    if (r.uncovered_vertex) {
      cur = restrict_support(cur);
      trace.steps.push_back({"restrict_support", *r.uncovered_vertex, cur});
      continue;
    }
    if (r.common_vertex) {
      cur = delete_common_vertex(cur, *r.common_vertex);
      trace.steps.push_back({"delete_common_vertex", *r.common_vertex, cur});
      continue;
    }
    const int k = sdepth(down_closure(cur)).value;
    const Antichain pureified = purify(cur, k);
    if (pureified == cur) break;
    cur = pureified;
    trace.steps.push_back({"purify", k, cur});
  }
  trace.result = cur;
  return trace;
}

}  // namespace sdepth
