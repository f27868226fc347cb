#pragma once

#include <vector>

#include "selfsum/nat.hpp"

namespace selfsum {

// Closed interval of naturals, both ends included; lo >= 1 and lo <= hi.
struct Interval {
  Nat lo;
  Nat hi;
  friend bool operator==(const Interval&, const Interval&) = default;
};

// Sorted, pairwise disjoint, non-adjacent closed intervals: the canonical
// representation of a finite set of naturals. Build one with normalize()
// or grow one in ascending order with append(); both keep the invariants,
// so two sets are equal iff their interval lists are equal.
class IntervalSet {
 public:
  IntervalSet() = default;

  const std::vector<Interval>& intervals() const { return intervals_; }
  bool empty() const { return intervals_.empty(); }

  // Binary search over the interval list.
  bool contains(Nat x) const;

  // Exact element count.
  Nat cardinality() const;

  Nat min() const;  // pre: not empty
  Nat max() const;  // pre: not empty

  // Add a single element strictly above max(); extends the last interval
  // when adjacent. Throws InvalidInterval when x <= max().
  void append(Nat x);

  // Visit every element in ascending order.
  template <class F>
  void for_each_element(F&& f) const {
    for (const Interval& iv : intervals_) {
      for (Nat x = iv.lo;; x += Nat(1)) {
        f(x);
        if (x == iv.hi) break;
      }
    }
  }

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  friend IntervalSet normalize(std::vector<Interval> raw);
  std::vector<Interval> intervals_;
};

// Unique normal form with the same membership: sorts, merges overlapping
// and adjacent intervals. Idempotent. Throws InvalidInterval if any input
// has lo > hi or lo = 0.
IntervalSet normalize(std::vector<Interval> raw);

// Sums of k pairwise-distinct elements of [a, b] form exactly the closed
// interval [k*a + k(k-1)/2, k*b - k(k-1)/2]: the least sum takes the k
// smallest elements, the greatest takes the k largest, and swapping one
// element for its neighbour moves the sum by 1, so nothing in between is
// missed. Requires k >= 1 and at least k elements in [a, b].
Interval interval_sum_range(Nat a, Nat b, Nat k);

}  // namespace selfsum
