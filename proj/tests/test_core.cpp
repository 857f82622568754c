#include <random>

#include "doctest.h"
#include "sdepth/core.hpp"
#include "sdepth/text_format.hpp"

using namespace sdepth;

namespace {

Antichain ac(int n, std::initializer_list<Mask> members) {
  return make_antichain(n, std::vector<Mask>(members));
}

// masks written in vertex digits: m(1,2,3) = {1,2,3}
template <typename... V>
Mask m(V... vs) {
  Mask out = 0;
  ((out |= Mask{1} << (vs - 1)), ...);
  return out;
}

Antichain random_antichain(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> count(0, 5);
  std::uniform_int_distribution<Mask> pick(1, full_mask(n));
  std::vector<Mask> chosen;
  const int want = count(rng);
  for (int tries = 0; tries < 40 && static_cast<int>(chosen.size()) < want; ++tries) {
    const Mask cand = pick(rng);
    bool ok = true;
    for (Mask c : chosen)
      if (comparable(c, cand)) { ok = false; break; }
    if (ok) chosen.push_back(cand);
  }
  return make_antichain(n, std::move(chosen));
}

}  // namespace

TEST_CASE("antichain construction validates and orders members") {
  const Antichain a = ac(5, {m(1, 2, 3), m(4, 5), m(2, 4)});
  CHECK(a.members == std::vector<Mask>{m(2, 4), m(4, 5), m(1, 2, 3)});
  CHECK(a.min_facet_size() == 2);
  CHECK(a.max_facet_size() == 3);
  CHECK_FALSE(a.pure());
  CHECK_THROWS_AS(ac(3, {m(1, 2), m(1)}), std::invalid_argument);
  CHECK_THROWS_AS(ac(3, {m(1, 2), m(1, 2)}), std::invalid_argument);
  CHECK_THROWS_AS(ac(2, {m(3)}), std::invalid_argument);
}

TEST_CASE("down closure of a single facet is the full cube below it") {
  const SetFamily fam = down_closure(ac(2, {m(1, 2)}));
  CHECK(fam.size() == 4);
  CHECK(fam.contains(0));
  CHECK(fam.contains(m(1)));
  CHECK(fam.contains(m(2)));
  CHECK(fam.contains(m(1, 2)));
  CHECK(fam.role() == Role::down_set);
}

TEST_CASE("down closure of the six-facet complex has f-vector (1,5,10,6)") {
  const Antichain a =
      ac(5, {m(1, 2, 3), m(1, 2, 4), m(1, 2, 5), m(1, 3, 4), m(3, 4, 5), m(2, 3, 4)});
  const FVector f = f_vector(down_closure(a), 3);
  CHECK(f.counts == std::vector<long long>{1, 5, 10, 6});
}

TEST_CASE("down closure of the empty antichain is empty") {
  const SetFamily fam = down_closure(make_antichain(4, {}));
  CHECK(fam.empty());
  const SetFamily comp = complement_upset(make_antichain(4, {}));
  CHECK(comp.size() == 16);  // the whole lattice
}

TEST_CASE("complement of the singleton complex is everything of size >= 2") {
  const SetFamily fam = complement_upset(ac(3, {m(1), m(2), m(3)}));
  CHECK(fam.size() == 4);
  for (Mask s : fam.members()) CHECK(set_size(s) >= 2);
}

TEST_CASE("complement of the four-facet complex misses only the pairs 25 and 35") {
  const Antichain a = ac(5, {m(1, 2, 3), m(1, 2, 4), m(1, 4, 5), m(2, 3, 4)});
  const SetFamily fam = complement_upset(a);
  std::vector<Mask> pairs;
  for (Mask s : fam.members())
    if (set_size(s) == 2) pairs.push_back(s);
  CHECK(pairs == std::vector<Mask>{m(2, 5), m(3, 5)});
}

TEST_CASE("complement of the full simplex is empty") {
  CHECK(complement_upset(ac(5, {m(1, 2, 3, 4, 5)})).empty());
}

TEST_CASE("f-vector of the 3-regular 3-uniform complex on 5 vertices") {
  // complements of the 5-cycle's edges
  const Antichain a =
      ac(5, {m(3, 4, 5), m(1, 4, 5), m(1, 2, 5), m(1, 2, 3), m(2, 3, 4)});
  CHECK(f_vector(down_closure(a), 3).counts ==
        std::vector<long long>{1, 5, 10, 5});
  CHECK(f_vector(SetFamily(4, Role::general), 4).counts ==
        std::vector<long long>{0, 0, 0, 0, 0});
}

TEST_CASE("partition validation reports overlaps, escapes, and gaps") {
  SetFamily square(2, Role::general);
  for (Mask s : {Mask{0}, m(1), m(2), m(1, 2)}) square.insert(s);

  IntervalPartition good{{make_interval(0, m(1, 2))}};
  CHECK_FALSE(validate_partition(good, square).has_value());

  IntervalPartition overlap{{make_interval(0, m(1, 2)), make_interval(m(2), m(1, 2))}};
  auto v = validate_partition(overlap, square);
  REQUIRE(v.has_value());
  CHECK(v->kind == PartitionViolation::Kind::overlap);

  IntervalPartition gap{{make_interval(0, m(1))}};
  v = validate_partition(gap, square);
  REQUIRE(v.has_value());
  CHECK(v->kind == PartitionViolation::Kind::uncovered);
  CHECK(v->witness == m(2));

  SetFamily no_pair(2, Role::general);
  for (Mask s : {Mask{0}, m(1), m(2)}) no_pair.insert(s);
  v = validate_partition(good, no_pair);
  REQUIRE(v.has_value());
  CHECK(v->kind == PartitionViolation::Kind::escapes);
}

TEST_CASE("the paper-style witness for the four-facet complex validates") {
  const Antichain a = ac(5, {m(1, 2, 3), m(1, 2, 4), m(1, 4, 5), m(2, 3, 4)});
  const SetFamily fam = complement_upset(a);
  IntervalPartition p{{make_interval(m(2, 5), m(1, 2, 4, 5)),
                       make_interval(m(3, 5), m(1, 3, 4, 5))}};
  SetFamily covered(5, Role::general);
  for (const auto& iv : p.intervals) {
    const Mask diff = iv.upper & ~iv.lower;
    Mask t = 0;
    for (;;) {
      covered.insert(iv.lower | t);
      if (t == diff) break;
      t = (t - diff) & diff;
    }
  }
  for (Mask s : fam.members())
    if (!covered.contains(s)) p.intervals.push_back(make_interval(s, s));
  CHECK_FALSE(validate_partition(p, fam).has_value());
  CHECK(set_size(p.intervals[0].upper) == 4);
  CHECK(set_size(p.intervals[1].upper) == 4);
}

TEST_CASE("singleton partition") {
  const IntervalPartition p1 = singleton_partition(1);
  REQUIRE(p1.intervals.size() == 1);
  CHECK(p1.intervals[0].lower == m(1));
  CHECK(p1.intervals[0].upper == m(1));

  const IntervalPartition p2 = singleton_partition(2);
  REQUIRE(p2.intervals.size() == 2);
  CHECK(p2.intervals[0].lower == m(2));
  CHECK(p2.intervals[0].upper == m(1, 2));
  CHECK(p2.intervals[1].lower == m(1));
  CHECK(p2.intervals[1].upper == m(1));

  for (int n = 1; n <= 6; ++n) {
    const IntervalPartition p = singleton_partition(n);
    CHECK(p.intervals.size() == static_cast<std::size_t>(n));
    SetFamily nonempty(n, Role::up_set);
    for (Mask s = 1; s <= full_mask(n); ++s) nonempty.insert(s);
    CHECK_FALSE(validate_partition(p, nonempty).has_value());
    for (int i = 0; i < n; ++i)
      CHECK(set_size(p.intervals[i].upper) == n - i);
  }
  CHECK_THROWS_AS(singleton_partition(0), std::invalid_argument);
}

TEST_CASE("down and up closures split the lattice") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 1 + trial % 6;
    const Antichain a = random_antichain(rng, n);
    const SetFamily down = down_closure(a);
    const SetFamily up = complement_upset(a);
    CHECK(down.size() + up.size() == (std::size_t{1} << n));
    for (Mask s = 0; s <= full_mask(n); ++s)
      CHECK(down.contains(s) != up.contains(s));

    const FVector f = f_vector(down, n);
    for (int i = 0; i <= n; ++i) CHECK(f.counts[i] <= binom(n, i));
    if (!a.empty()) CHECK(f.counts[0] == 1);

    // a valid partition covers the family with the right total weight
    const auto maxima = maximal_elements(down);
    if (!a.empty()) CHECK(maxima == a);
  }
}

TEST_CASE("interval partitions account for every covered set") {
  // if validation passes, the interval sizes add up to the family size
  const Antichain a = ac(4, {m(1, 2), m(2, 3), m(3, 4)});
  const SetFamily fam = down_closure(a);
  IntervalPartition p;
  p.intervals.push_back(make_interval(0, m(1, 2)));
  p.intervals.push_back(make_interval(m(3), m(3, 4)));
  p.intervals.push_back(make_interval(m(2, 3), m(2, 3)));
  CHECK_FALSE(validate_partition(p, fam).has_value());
  std::uint64_t total = 0;
  for (const auto& iv : p.intervals) total += iv.size();
  CHECK(total == fam.size());
}

TEST_CASE("minimal elements of an up set are its generators") {
  const Antichain gens = ac(4, {m(1, 2), m(3)});
  const SetFamily up = up_closure(gens);
  CHECK(minimal_elements(up) == gens);
  CHECK(up.contains(m(1, 2, 3, 4)));
  CHECK_FALSE(up.contains(m(1)));
}
