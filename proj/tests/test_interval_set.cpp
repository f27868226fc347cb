#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <vector>

#include "brute_force.hpp"
#include "selfsum/interval_set.hpp"

using selfsum::Interval;
using selfsum::IntervalSet;
using selfsum::Nat;
using selfsum::normalize;

namespace {

IntervalSet make(std::vector<std::pair<std::uint64_t, std::uint64_t>> raw) {
  std::vector<Interval> v;
  for (auto [lo, hi] : raw) v.push_back({Nat(lo), Nat(hi)});
  return normalize(std::move(v));
}

std::vector<Interval> raw_of(
    std::vector<std::pair<std::uint64_t, std::uint64_t>> raw) {
  std::vector<Interval> v;
  for (auto [lo, hi] : raw) v.push_back({Nat(lo), Nat(hi)});
  return v;
}

}  // namespace

TEST_CASE("normalize merges adjacency, overlap, and ordering") {
  CHECK(make({{1, 5}, {6, 9}}) == make({{1, 9}}));
  CHECK(make({{3, 4}, {1, 2}, {3, 7}}) == make({{1, 7}}));
  const IntervalSet q4 = make({{1, 9}, {31, 36}});
  REQUIRE(q4.intervals().size() == 2);
  CHECK(q4.intervals()[0] == Interval{Nat(1), Nat(9)});
  CHECK(q4.intervals()[1] == Interval{Nat(31), Nat(36)});
  CHECK(normalize({}).empty());
}

TEST_CASE("normalize rejects malformed intervals") {
  CHECK_THROWS_AS(normalize(raw_of({{0, 3}})), selfsum::InvalidInterval);
  CHECK_THROWS_AS(normalize(raw_of({{5, 3}})), selfsum::InvalidInterval);
}

TEST_CASE("normalize is idempotent on random input") {
  std::mt19937_64 rng(42);
  for (int iter = 0; iter < 300; ++iter) {
    std::vector<Interval> raw;
    const int count = int(rng() % 8);
    for (int i = 0; i < count; ++i) {
      const std::uint64_t lo = rng() % 50 + 1;
      raw.push_back({Nat(lo), Nat(lo + rng() % 10)});
    }
    const IntervalSet once = normalize(raw);
    CHECK(normalize(once.intervals()) == once);
  }
}

TEST_CASE("contains answers by binary search") {
  const IntervalSet q4 = make({{1, 9}, {31, 36}});
  CHECK(q4.contains(Nat(33)));
  CHECK(!q4.contains(Nat(10)));
  CHECK(!IntervalSet{}.contains(Nat(1)));
  CHECK(q4.contains(Nat(1)));
  CHECK(q4.contains(Nat(9)));
  CHECK(q4.contains(Nat(31)));
  CHECK(q4.contains(Nat(36)));
  CHECK(!q4.contains(Nat(37)));
  CHECK(!q4.contains(Nat(30)));
}

TEST_CASE("contains agrees with a linear scan") {
  std::mt19937_64 rng(1234);
  for (int iter = 0; iter < 200; ++iter) {
    std::vector<Interval> raw;
    const int count = 1 + int(rng() % 6);
    for (int i = 0; i < count; ++i) {
      const std::uint64_t lo = rng() % 80 + 1;
      raw.push_back({Nat(lo), Nat(lo + rng() % 12)});
    }
    const IntervalSet s = normalize(raw);
    const std::uint64_t top = selfsum::to_u64(s.max()) + 1;
    for (std::uint64_t x = 1; x <= top; ++x) {
      bool linear = false;
      for (const Interval& iv : s.intervals())
        linear = linear || (iv.lo <= Nat(x) && Nat(x) <= iv.hi);
      CHECK(s.contains(Nat(x)) == linear);
    }
  }
}

TEST_CASE("cardinality is exact") {
  CHECK(make({{1, 9}, {31, 36}}).cardinality() == Nat(15));
  CHECK(make({{1, 54}, {496, 540}}).cardinality() == Nat(99));
  CHECK(IntervalSet{}.cardinality() == Nat(0));
}

TEST_CASE("cardinality of a normalized set counts distinct raw elements") {
  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 200; ++iter) {
    std::vector<Interval> raw;
    std::set<std::uint64_t> elements;
    const int count = int(rng() % 7);
    for (int i = 0; i < count; ++i) {
      const std::uint64_t lo = rng() % 40 + 1;
      const std::uint64_t hi = lo + rng() % 8;
      raw.push_back({Nat(lo), Nat(hi)});
      for (std::uint64_t x = lo; x <= hi; ++x) elements.insert(x);
    }
    CHECK(normalize(raw).cardinality() == Nat(elements.size()));
  }
}

TEST_CASE("append keeps the normal form") {
  IntervalSet s;
  for (std::uint64_t x : {1, 2, 4, 7, 10}) s.append(Nat(x));
  CHECK(s == make({{1, 2}, {4, 4}, {7, 7}, {10, 10}}));
  s.append(Nat(11));
  CHECK(s.max() == Nat(11));
  CHECK(s.intervals().back() == Interval{Nat(10), Nat(11)});
  CHECK_THROWS_AS(s.append(Nat(11)), selfsum::InvalidInterval);
  CHECK_THROWS_AS(s.append(Nat(5)), selfsum::InvalidInterval);
  CHECK_THROWS_AS(s.append(Nat(0)), selfsum::InvalidInterval);
  CHECK(s.min() == Nat(1));
  CHECK_THROWS_AS(IntervalSet{}.max(), std::logic_error);
}

TEST_CASE("for_each_element walks ascending") {
  std::vector<std::uint64_t> seen;
  make({{1, 3}, {7, 8}}).for_each_element(
      [&](Nat x) { seen.push_back(selfsum::to_u64(x)); });
  CHECK(seen == std::vector<std::uint64_t>{1, 2, 3, 7, 8});
}

TEST_CASE("interval_sum_range matches the landmark examples") {
  CHECK(selfsum::interval_sum_range(Nat(1), Nat(9), Nat(4)) ==
        Interval{Nat(10), Nat(30)});
  CHECK(selfsum::interval_sum_range(Nat(1), Nat(54), Nat(10)) ==
        Interval{Nat(55), Nat(495)});
  CHECK(selfsum::interval_sum_range(Nat(5), Nat(5), Nat(1)) ==
        Interval{Nat(5), Nat(5)});
}

TEST_CASE("interval_sum_range rejects unusable input") {
  CHECK_THROWS_AS(selfsum::interval_sum_range(Nat(1), Nat(3), Nat(4)),
                  selfsum::NotEnoughElements);
  CHECK_THROWS_AS(selfsum::interval_sum_range(Nat(5), Nat(4), Nat(1)),
                  selfsum::NotEnoughElements);
  CHECK_THROWS_AS(selfsum::interval_sum_range(Nat(1), Nat(3), Nat(0)),
                  selfsum::NotEnoughElements);
  CHECK_THROWS_AS(selfsum::interval_sum_range(Nat(0), Nat(3), Nat(2)),
                  selfsum::InvalidInterval);
  const Nat huge = Nat::from_raw(Nat::max_rep / 2);
  CHECK_THROWS_AS(selfsum::interval_sum_range(Nat(1), huge, huge),
                  selfsum::OverflowError);
}

TEST_CASE("sum range equals exhaustive k-subset enumeration") {
  // Smaller sweep here; the full 1 <= a <= b <= 15, k <= 5 grid runs in
  // the acceptance suite.
  for (std::uint64_t a = 1; a <= 10; ++a) {
    for (std::uint64_t b = a; b <= 12; ++b) {
      std::vector<std::uint64_t> elems;
      for (std::uint64_t e = a; e <= b; ++e) elems.push_back(e);
      for (unsigned k = 1; k <= 4 && k <= elems.size(); ++k) {
        const auto sums = selfsum::testing::k_subset_sums(elems, k);
        const Interval range =
            selfsum::interval_sum_range(Nat(a), Nat(b), Nat(k));
        REQUIRE(!sums.empty());
        CHECK(Nat(*sums.begin()) == range.lo);
        CHECK(Nat(*sums.rbegin()) == range.hi);
        CHECK(sums.size() == *sums.rbegin() - *sums.begin() + 1);
      }
    }
  }
}
