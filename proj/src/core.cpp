#include "sdepth/core.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace sdepth {

namespace {

std::string set_to_debug(Mask m) {
  std::string s = "{";
  for (int v = 1; v <= max_ground; ++v) {
    if (m & (Mask{1} << (v - 1))) {
      if (s.size() > 1) s += ',';
      s += std::to_string(v);
    }
  }
  return s + "}";
}

}  // namespace

long long binom(int n, int k) {
  static const auto table = [] {
    std::array<std::array<long long, 34>, 34> t{};
    for (int i = 0; i < 34; ++i) {
      t[i][0] = 1;
      for (int j = 1; j <= i; ++j)
        t[i][j] = t[i - 1][j - 1] + (j <= i - 1 ? t[i - 1][j] : 0);
    }
    return t;
  }();
  if (k < 0 || k > n || n < 0) return 0;
  if (n < 34) return table[n][k];
  throw std::invalid_argument("binom: argument out of range");
}

int Antichain::min_facet_size() const {
  if (members.empty()) throw std::logic_error("min_facet_size of empty antichain");
  return set_size(members.front());  // canonical order: smallest first
}

int Antichain::max_facet_size() const {
  if (members.empty()) throw std::logic_error("max_facet_size of empty antichain");
  return set_size(members.back());
}

bool Antichain::pure() const {
  return members.empty() || set_size(members.front()) == set_size(members.back());
}

Mask Antichain::support() const {
  Mask u = 0;
  for (Mask m : members) u |= m;
  return u;
}

Mask Antichain::common() const {
  if (members.empty()) return 0;
  Mask c = full_mask(n);
  for (Mask m : members) c &= m;
  return c;
}

Antichain make_antichain(int n, std::vector<Mask> members) {
  if (n < 0 || n > max_ground)
    throw std::invalid_argument("ground set size must be between 0 and 16");
  const Mask full = full_mask(n);
  for (Mask m : members) {
    if (!subset_of(m, full))
      throw std::invalid_argument("member " + set_to_debug(m) +
                                  " exceeds ground set [" + std::to_string(n) + "]");
  }
  std::sort(members.begin(), members.end(), canonical_set_less);
  for (std::size_t i = 0; i + 1 < members.size(); ++i)
    if (members[i] == members[i + 1])
      throw std::invalid_argument("duplicate member " + set_to_debug(members[i]));
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (comparable(members[i], members[j]))
        throw std::invalid_argument("comparable pair " + set_to_debug(members[i]) +
                                    " and " + set_to_debug(members[j]));
  Antichain a;
  a.n = n;
  a.members = std::move(members);
  return a;
}

SetFamily::SetFamily(int n, Role role) : n_(n), role_(role) {
  if (n < 0 || n > max_ground)
    throw std::invalid_argument("ground set size must be between 0 and 16");
  const std::size_t bits = std::size_t{1} << n;
  words_.assign((bits + 63) / 64, 0);
}

void SetFamily::insert(Mask m) {
  std::uint64_t& w = words_[m >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (m & 63u);
  if (!(w & bit)) {
    w |= bit;
    ++count_;
  }
}

void SetFamily::erase(Mask m) {
  std::uint64_t& w = words_[m >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (m & 63u);
  if (w & bit) {
    w &= ~bit;
    --count_;
  }
}

std::vector<Mask> SetFamily::members() const {
  std::vector<Mask> out;
  out.reserve(count_);
  const Mask limit = full_mask(n_);
  for (Mask m = 0;; ++m) {
    if (contains(m)) out.push_back(m);
    if (m == limit) break;
  }
  return out;
}

std::vector<Mask> SetFamily::members_canonical() const {
  auto out = members();
  std::sort(out.begin(), out.end(), canonical_set_less);
  return out;
}

Interval make_interval(Mask lower, Mask upper) {
  if (!subset_of(lower, upper))
    throw std::invalid_argument("interval lower bound not contained in upper bound");
  return Interval{lower, upper};
}

std::optional<int> IntervalPartition::min_top_size() const {
  if (intervals.empty()) return std::nullopt;
  int best = max_ground + 1;
  for (const auto& iv : intervals) best = std::min(best, set_size(iv.upper));
  return best;
}

SetFamily down_closure(const Antichain& facets) {
  SetFamily fam(facets.n, Role::down_set);
  // D[{}] is empty by convention, so the complement of an empty antichain
  // is the whole lattice.
  for (Mask f : facets.members) {
    Mask s = f;
    for (;;) {
      fam.insert(s);
      if (s == 0) break;
      s = (s - 1) & f;
    }
  }
  return fam;
}

SetFamily up_closure(const Antichain& gens) {
  SetFamily fam(gens.n, Role::up_set);
  const Mask full = full_mask(gens.n);
  for (Mask g : gens.members) {
    const Mask rest = full & ~g;
    Mask t = 0;
    for (;;) {
      fam.insert(g | t);
      if (t == rest) break;
      t = (t - rest) & rest;
    }
  }
  return fam;
}

SetFamily complement_upset(const Antichain& facets) {
  const SetFamily down = down_closure(facets);
  SetFamily fam(facets.n, Role::up_set);
  const Mask limit = full_mask(facets.n);
  for (Mask m = 0;; ++m) {
    if (!down.contains(m)) fam.insert(m);
    if (m == limit) break;
  }
  return fam;
}

FVector f_vector(const SetFamily& family, int top) {
  if (top < 0 || top > family.ground())
    throw std::invalid_argument("f_vector: top must be between 0 and n");
  FVector f;
  f.counts.assign(top + 1, 0);
  const Mask limit = full_mask(family.ground());
  for (Mask m = 0;; ++m) {
    if (family.contains(m)) {
      const int c = set_size(m);
      if (c <= top) ++f.counts[c];
    }
    if (m == limit) break;
  }
  return f;
}

Antichain maximal_elements(const SetFamily& family) {
  const auto mem = family.members();
  std::vector<Mask> out;
  for (Mask m : mem) {
    bool maximal = true;
    if (family.role() == Role::down_set || family.role() == Role::up_set) {
      for (int v = 0; v < family.ground() && maximal; ++v) {
        const Mask up = m | (Mask{1} << v);
        if (up != m && family.contains(up)) maximal = false;
      }
    } else {
      for (Mask other : mem)
        if (other != m && subset_of(m, other)) { maximal = false; break; }
    }
    if (maximal) out.push_back(m);
  }
  return make_antichain(family.ground(), std::move(out));
}

Antichain minimal_elements(const SetFamily& family) {
  const auto mem = family.members();
  std::vector<Mask> out;
  for (Mask m : mem) {
    bool minimal = true;
    if (family.role() == Role::down_set || family.role() == Role::up_set) {
      Mask rest = m;
      while (rest && minimal) {
        const Mask low = m & ~(rest & -rest);
        rest &= rest - 1;
        if (family.contains(low)) minimal = false;
      }
    } else {
      for (Mask other : mem)
        if (other != m && subset_of(other, m)) { minimal = false; break; }
    }
    if (minimal) out.push_back(m);
  }
  return make_antichain(family.ground(), std::move(out));
}

std::optional<PartitionViolation> validate_partition(const IntervalPartition& p,
                                                     const SetFamily& family) {
  SetFamily covered(family.ground(), Role::general);
  for (const auto& iv : p.intervals) {
    if (!subset_of(iv.lower, iv.upper))
      throw std::invalid_argument("malformed interval in partition");
    const Mask diff = iv.upper & ~iv.lower;
    Mask t = 0;
    for (;;) {  // ascending subsets of diff
      const Mask c = iv.lower | t;
      if (!family.contains(c))
        return PartitionViolation{PartitionViolation::Kind::escapes, c};
      if (covered.contains(c))
        return PartitionViolation{PartitionViolation::Kind::overlap, c};
      covered.insert(c);
      if (t == diff) break;
      t = (t - diff) & diff;
    }
  }
  for (Mask m : family.members_canonical())
    if (!covered.contains(m))
      return PartitionViolation{PartitionViolation::Kind::uncovered, m};
  return std::nullopt;
}

IntervalPartition singleton_partition(int n) {
  if (n < 1) throw std::invalid_argument("singleton_partition needs n >= 1");
  if (n > max_ground) throw std::invalid_argument("ground set too large");
  IntervalPartition p;
  for (int k = n; k >= 1; --k)
    p.intervals.push_back(Interval{Mask{1} << (k - 1), full_mask(k)});
  return p;
}

}  // namespace sdepth
