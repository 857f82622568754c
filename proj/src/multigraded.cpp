#include "sdepth/multigraded.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <unordered_set>

namespace sdepth {

namespace {

constexpr std::size_t kPointGuard = 5000;
constexpr std::size_t kBoxGuard = std::size_t{1} << 24;

std::string md_to_string(const Multidegree& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(c[i]);
  }
  return s + ")";
}

std::size_t box_size(const Multidegree& g) {
  std::size_t total = 1;
  for (int gi : g) {
    if (gi < 0) throw std::invalid_argument("bound with a negative entry");
    total *= static_cast<std::size_t>(gi) + 1;
    if (total > kBoxGuard) throw std::invalid_argument("grid box too large");
  }
  return total;
}

// mixed-radix id; lexicographic order on points equals id order
struct BoxIndex {
  Multidegree g;
  std::vector<std::size_t> stride;

  explicit BoxIndex(const Multidegree& bound) : g(bound) {
    stride.assign(g.size(), 1);
    for (int i = static_cast<int>(g.size()) - 2; i >= 0; --i)
      stride[i] = stride[i + 1] * (static_cast<std::size_t>(g[i + 1]) + 1);
  }
  std::size_t size() const {
    return g.empty() ? 1 : stride[0] * (static_cast<std::size_t>(g[0]) + 1);
  }
  std::size_t id(const Multidegree& c) const {
    std::size_t v = 0;
    for (std::size_t i = 0; i < g.size(); ++i) v += stride[i] * c[i];
    return v;
  }
  Multidegree at(std::size_t id_) const {
    Multidegree c(g.size(), 0);
    for (std::size_t i = 0; i < g.size(); ++i) {
      c[i] = static_cast<int>(id_ / stride[i]);
      id_ %= stride[i];
    }
    return c;
  }
};

}  // namespace

bool md_leq(const Multidegree& a, const Multidegree& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

int alpha(const Multidegree& c, const Multidegree& g) {
  if (!md_leq(c, g))
    throw std::invalid_argument("alpha: point " + md_to_string(c) +
                                " not below the bound " + md_to_string(g));
  int count = 0;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] == g[i]) ++count;
  return count;
}

Multidegree default_bound(const std::vector<Multidegree>& gens_i,
                          const std::vector<Multidegree>& gens_j) {
  if (gens_i.empty() && gens_j.empty())
    throw std::invalid_argument("default_bound: no generators");
  const std::size_t n = gens_i.empty() ? gens_j[0].size() : gens_i[0].size();
  Multidegree g(n, 0);
  for (const auto* list : {&gens_i, &gens_j})
    for (const auto& a : *list) {
      if (a.size() != n) throw std::invalid_argument("dimension mismatch");
      for (std::size_t i = 0; i < n; ++i) g[i] = std::max(g[i], a[i]);
    }
  return g;
}

GridPoset build_quotient_poset(const std::vector<Multidegree>& gens_i,
                               const std::vector<Multidegree>& gens_j,
                               const Multidegree& g) {
  GridPoset poset;
  poset.n = static_cast<int>(g.size());
  poset.g = g;
  poset.gens_i = gens_i;
  poset.gens_j = gens_j;
  for (const auto* list : {&gens_i, &gens_j})
    for (const auto& a : *list) {
      if (a.size() != g.size()) throw std::invalid_argument("dimension mismatch");
      for (int e : a)
        if (e < 0) throw std::invalid_argument("generator with a negative entry");
      if (!md_leq(a, g))
        throw std::invalid_argument("generator " + md_to_string(a) +
                                    " not below the bound " + md_to_string(g));
    }
  const BoxIndex box(g);
  const std::size_t total = box_size(g);
  for (std::size_t id = 0; id < total; ++id) {
    const Multidegree c = box.at(id);
    bool above_i = false;
    for (const auto& a : gens_i)
      if (md_leq(a, c)) { above_i = true; break; }
    if (!above_i) continue;
    bool below_j = true;
    for (const auto& b : gens_j)
      if (md_leq(b, c)) { below_j = false; break; }
    if (below_j) poset.points.push_back(c);
  }
  return poset;
}

std::optional<GridViolation> validate_grid_partition(const GridPartition& p,
                                                     const GridPoset& poset) {
  const BoxIndex box(poset.g);
  std::vector<char> in_poset(box.size(), 0), covered(box.size(), 0);
  for (const auto& c : poset.points) in_poset[box.id(c)] = 1;
  for (const auto& iv : p.intervals) {
    if (iv.lower.size() != poset.g.size() || iv.upper.size() != poset.g.size() ||
        !md_leq(iv.lower, iv.upper) || !md_leq(iv.upper, poset.g))
      return GridViolation{GridViolation::Kind::malformed, iv.lower};
    Multidegree c = iv.lower;
    for (;;) {
      const std::size_t id = box.id(c);
      if (!in_poset[id]) return GridViolation{GridViolation::Kind::escapes, c};
      if (covered[id]) return GridViolation{GridViolation::Kind::overlap, c};
      covered[id] = 1;
      // advance within the sub-box [lower, upper]
      int i = static_cast<int>(c.size()) - 1;
      for (; i >= 0; --i) {
        if (c[i] < iv.upper[i]) {
          ++c[i];
          break;
        }
        c[i] = iv.lower[i];
      }
      if (i < 0) break;
    }
  }
  for (const auto& c : poset.points)
    if (!covered[box.id(c)])
      return GridViolation{GridViolation::Kind::uncovered, c};
  return std::nullopt;
}

namespace {

struct GridSearch {
  const GridPoset& poset;
  const BoxIndex box;
  int k;
  std::vector<char> in_poset;
  std::vector<int> alpha_of;  // by box id
  std::vector<char> covered;
  std::vector<std::size_t> point_ids;  // ascending
  std::vector<GridInterval> placed;
  std::unordered_set<std::string> failed;  // covered-state memo

  GridSearch(const GridPoset& p, int k_) : poset(p), box(p.g), k(k_) {
    in_poset.assign(box.size(), 0);
    alpha_of.assign(box.size(), 0);
    for (const auto& c : p.points) {
      const std::size_t id = box.id(c);
      in_poset[id] = 1;
      alpha_of[id] = alpha(c, p.g);
      point_ids.push_back(id);
    }
    std::sort(point_ids.begin(), point_ids.end());
  }

  std::string state_key() const {
    std::string s(covered.begin(), covered.end());
    return s;
  }

  bool box_free(const Multidegree& lo, const Multidegree& hi,
                std::vector<std::size_t>& cells) const {
    cells.clear();
    Multidegree c = lo;
    for (;;) {
      const std::size_t id = box.id(c);
      if (!in_poset[id] || covered[id]) return false;
      cells.push_back(id);
      int i = static_cast<int>(c.size()) - 1;
      for (; i >= 0; --i) {
        if (c[i] < hi[i]) {
          ++c[i];
          break;
        }
        c[i] = lo[i];
      }
      if (i < 0) break;
    }
    return true;
  }

  bool run(std::size_t lo_idx) {
    while (lo_idx < point_ids.size() && covered[point_ids[lo_idx]]) ++lo_idx;
    if (lo_idx == point_ids.size()) return true;
    if (failed.size() < (std::size_t{1} << 20) && failed.count(state_key())) return false;
    const Multidegree m = box.at(point_ids[lo_idx]);
    std::vector<std::size_t> cells;
    for (std::size_t cand : point_ids) {
      if (alpha_of[cand] < k) continue;
      const Multidegree b = box.at(cand);
      if (!md_leq(m, b)) continue;
      if (!box_free(m, b, cells)) continue;
      for (std::size_t id : cells) covered[id] = 1;
      placed.push_back(GridInterval{m, b});
      if (run(lo_idx)) return true;
      placed.pop_back();
      for (std::size_t id : cells) covered[id] = 0;
    }
    if (failed.size() < (std::size_t{1} << 20)) failed.insert(state_key());
    return false;
  }
};

}  // namespace

GridSdepthAnswer grid_sdepth(const GridPoset& poset) {
  if (poset.points.size() > kPointGuard)
    throw std::invalid_argument("grid_sdepth: poset exceeds the 5000-point guard");
  GridSdepthAnswer ans;
  if (poset.points.empty()) {
    ans.value = poset.n;
    ans.empty_poset = true;
    ans.witness.sdepth = poset.n;
    return ans;
  }
  // a maximal point tops its own interval, capping the scan
  const BoxIndex box(poset.g);
  std::vector<char> present(box.size(), 0);
  for (const auto& c : poset.points) present[box.id(c)] = 1;
  int cap = poset.n;
  for (const auto& c : poset.points) {
    bool maximal = true;
    for (std::size_t i = 0; i < c.size() && maximal; ++i) {
      if (c[i] < poset.g[i]) {
        Multidegree up = c;
        ++up[i];
        if (present[box.id(up)]) maximal = false;
      }
    }
    if (maximal) cap = std::min(cap, alpha(c, poset.g));
  }

  auto attempt = [&](int k) -> std::optional<GridPartition> {
    GridSearch search(poset, k);
    search.covered.assign(search.box.size(), 0);
    if (!search.run(0)) return std::nullopt;
    GridPartition p;
    p.intervals = search.placed;
    p.sdepth = poset.n;
    for (const auto& iv : p.intervals)
      p.sdepth = std::min(p.sdepth, alpha(iv.upper, poset.g));
    return p;
  };

  auto base = attempt(0);
  ans.witness = std::move(*base);
  ans.value = 0;
  for (int k = 1; k <= cap; ++k) {
    auto r = attempt(k);
    if (!r) break;
    ans.value = k;
    ans.witness = std::move(*r);
  }
  return ans;
}

// --- three-variable constructive partition ---------------------------------

namespace n3 {

// perm[new_coordinate] = old_coordinate
using Perm = std::array<int, 3>;

Multidegree apply_perm(const Multidegree& v, const Perm& p) {
  return Multidegree{v[p[0]], v[p[1]], v[p[2]]};
}

Multidegree unapply_perm(const Multidegree& v, const Perm& p) {
  Multidegree out(3, 0);
  for (int i = 0; i < 3; ++i) out[p[i]] = v[i];
  return out;
}

std::string perm_string(const Perm& p) {
  return "(" + std::to_string(p[0] + 1) + "," + std::to_string(p[1] + 1) + "," +
         std::to_string(p[2] + 1) + ")";
}

std::string md_str(const Multidegree& c) {
  return "(" + std::to_string(c[0]) + "," + std::to_string(c[1]) + "," +
         std::to_string(c[2]) + ")";
}

// M is the antichain of maximal points of the quotient side within the
// box below g; intervals returned partition the complement.
void construct(std::vector<Multidegree> maxima, Multidegree g,
               std::vector<GridInterval>& out, std::vector<std::string>& trace,
               int depth) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  if (maxima.empty()) {
    out.push_back(GridInterval{Multidegree{0, 0, 0}, g});
    trace.push_back(pad + "empty quotient: single interval [0," + md_str(g) + "]");
    return;
  }
  std::sort(maxima.begin(), maxima.end());

  int amin = 3;
  for (const auto& b : maxima) amin = std::min(amin, alpha(b, g));

  if (amin >= 2) {
    // at most one maximal point disagrees with g per coordinate
    Multidegree c(3, 0);
    for (int i = 0; i < 3; ++i)
      for (const auto& z : maxima)
        if (z[i] != g[i]) c[i] = z[i] + 1;
    out.push_back(GridInterval{c, g});
    trace.push_back(pad + "alpha(M) = 2: single interval [" + md_str(c) + "," +
                    md_str(g) + "]");
    return;
  }

  // strip a point that agrees with g in two coordinates, shift past it
  for (const auto& b : maxima) {
    if (alpha(b, g) != 2) continue;
    int off = 0;
    for (int i = 0; i < 3; ++i)
      if (b[i] != g[i]) off = i;
    Perm p{(off + 1) % 3, (off + 2) % 3, off};
    if (p[0] > p[1]) std::swap(p[0], p[1]);  // keep agreeing coords in order
    const Multidegree bp = apply_perm(b, p);
    const int shift = bp[2] + 1;
    Multidegree gp = apply_perm(g, p);
    gp[2] -= shift;
    std::vector<Multidegree> rest;
    for (const auto& m : maxima) {
      if (m == b) continue;
      Multidegree mp = apply_perm(m, p);
      mp[2] -= shift;  // every other maximal point lies above the stripped one
      rest.push_back(mp);
    }
    trace.push_back(pad + "strip " + md_str(b) + " (alpha 2), permute " +
                    perm_string(p) + ", shift " + std::to_string(shift));
    std::vector<GridInterval> sub;
    construct(std::move(rest), gp, sub, trace, depth + 1);
    for (auto& iv : sub) {
      iv.lower[2] += shift;
      iv.upper[2] += shift;
      out.push_back(GridInterval{unapply_perm(iv.lower, p), unapply_perm(iv.upper, p)});
    }
    return;
  }

  if (amin == 0) {
    // columns in the third coordinate; tops agree with g there
    trace.push_back(pad + "alpha(M) = 0: column partition");
    for (int i = 0; i <= g[0]; ++i)
      for (int j = 0; j <= g[1]; ++j) {
        int low = 0;
        for (const auto& b : maxima)
          if (b[0] >= i && b[1] >= j) low = std::max(low, b[2] + 1);
        if (low <= g[2])
          out.push_back(GridInterval{Multidegree{i, j, low}, Multidegree{i, j, g[2]}});
      }
    return;
  }

  // every maximal point agrees with g in exactly one coordinate
  auto gamma = [&](const Multidegree& b) {
    int v = 0;
    for (int i = 0; i < 3; ++i)
      if (b[i] != g[i]) v = std::max(v, b[i]);
    return v;
  };
  Multidegree b0 = maxima[0];
  for (const auto& b : maxima)
    if (gamma(b) > gamma(b0)) b0 = b;

  int agree = 0;
  for (int i = 0; i < 3; ++i)
    if (b0[i] == g[i]) agree = i;
  const int c1o = (agree + 1) % 3, c2o = (agree + 2) % 3;
  int big = std::min(c1o, c2o), small = std::max(c1o, c2o);
  if (b0[small] > b0[big]) std::swap(big, small);
  const Perm p{agree, big, small};

  const Multidegree gp = apply_perm(g, p);
  const Multidegree b0p = apply_perm(b0, p);
  std::vector<Multidegree> mp;
  for (const auto& m : maxima) mp.push_back(apply_perm(m, p));

  int c1 = 0;
  bool have_c1 = false;
  for (const auto& b : mp)
    if (b[0] != gp[0] && b[1] == gp[1]) {
      c1 = std::max(c1, b[0] + 1);
      have_c1 = true;
    }
  if (!have_c1) c1 = 0;
  const int c2 = b0p[1] + 1;
  int c3 = gp[2];
  for (const auto& b : mp) c3 = std::min(c3, b[2]);

  const Multidegree s{c1, c2, 0};
  const Multidegree t{gp[0], gp[1], c3};
  trace.push_back(pad + "alpha(M) = 1: permute " + perm_string(p) + ", b0 = " +
                  md_str(b0) + ", interval [" + md_str(s) + "," + md_str(t) +
                  "] then recurse above level " + std::to_string(c3));

  std::vector<Multidegree> rest;
  for (const auto& b : mp)
    if (b[2] > c3) {
      Multidegree shifted = b;
      shifted[2] -= c3 + 1;
      rest.push_back(shifted);
    }
  Multidegree gpp = gp;
  gpp[2] -= c3 + 1;

  out.push_back(GridInterval{unapply_perm(s, p), unapply_perm(t, p)});
  std::vector<GridInterval> sub;
  construct(std::move(rest), gpp, sub, trace, depth + 1);
  for (auto& iv : sub) {
    iv.lower[2] += c3 + 1;
    iv.upper[2] += c3 + 1;
    out.push_back(GridInterval{unapply_perm(iv.lower, p), unapply_perm(iv.upper, p)});
  }
}

}  // namespace n3

N3Construction n3_construct(const std::vector<Multidegree>& gens_i,
                            const Multidegree& g) {
  if (g.size() != 3) throw std::invalid_argument("n3_construct: need n = 3");
  if (gens_i.empty()) throw std::invalid_argument("n3_construct: no generators");
  for (const auto& a : gens_i) {
    if (a.size() != 3) throw std::invalid_argument("n3_construct: need n = 3");
    for (int e : a)
      if (e < 0) throw std::invalid_argument("generator with a negative entry");
    if (!md_leq(a, g))
      throw std::invalid_argument("generator not below the bound");
  }

  // maximal points of the quotient side
  N3Construction res;
  const BoxIndex box(g);
  std::vector<char> in_quotient(box.size(), 0);
  for (std::size_t id = 0; id < box.size(); ++id) {
    const Multidegree c = box.at(id);
    bool above = false;
    for (const auto& a : gens_i)
      if (md_leq(a, c)) { above = true; break; }
    in_quotient[id] = above ? 0 : 1;
  }
  for (std::size_t id = 0; id < box.size(); ++id) {
    if (!in_quotient[id]) continue;
    const Multidegree c = box.at(id);
    bool maximal = true;
    for (int i = 0; i < 3 && maximal; ++i)
      if (c[i] < g[i]) {
        Multidegree up = c;
        ++up[i];
        if (in_quotient[box.id(up)]) maximal = false;
      }
    if (maximal) res.quotient_maximals.push_back(c);
  }

  res.alpha_m = 3;
  for (const auto& b : res.quotient_maximals)
    res.alpha_m = std::min(res.alpha_m, alpha(b, g));
  if (res.quotient_maximals.empty()) res.alpha_m = -1;  // empty quotient

  std::vector<GridInterval> intervals;
  n3::construct(res.quotient_maximals, g, intervals, res.trace, 0);
  res.partition.intervals = std::move(intervals);
  res.partition.sdepth = 3;
  for (const auto& iv : res.partition.intervals)
    res.partition.sdepth = std::min(res.partition.sdepth, alpha(iv.upper, g));
  return res;
}

}  // namespace sdepth
