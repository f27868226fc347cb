#include "selfsum/interval_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace selfsum {

bool IntervalSet::contains(Nat x) const {
  // Last interval with lo <= x, if any.
  auto it = std::upper_bound(
      intervals_.begin(), intervals_.end(), x,
      [](Nat value, const Interval& iv) { return value < iv.lo; });
  if (it == intervals_.begin()) return false;
  --it;
  return x <= it->hi;
}

Nat IntervalSet::cardinality() const {
  Nat total = 0;
  for (const Interval& iv : intervals_) total += iv.hi - iv.lo + Nat(1);
  return total;
}

Nat IntervalSet::min() const {
  if (intervals_.empty()) throw std::logic_error("min() of empty interval set");
  return intervals_.front().lo;
}

Nat IntervalSet::max() const {
  if (intervals_.empty()) throw std::logic_error("max() of empty interval set");
  return intervals_.back().hi;
}

void IntervalSet::append(Nat x) {
  if (x < Nat(1)) throw InvalidInterval("append: 0 is not a natural");
  if (intervals_.empty()) {
    intervals_.push_back({x, x});
    return;
  }
  Interval& last = intervals_.back();
  if (x <= last.hi)
    throw InvalidInterval("append: " + to_string(x) +
                          " is not above the current maximum " +
                          to_string(last.hi));
  if (x - Nat(1) == last.hi)
    last.hi = x;
  else
    intervals_.push_back({x, x});
}

IntervalSet normalize(std::vector<Interval> raw) {
  for (const Interval& iv : raw) {
    if (iv.lo < Nat(1))
      throw InvalidInterval("interval lower bound must be >= 1");
    if (iv.lo > iv.hi)
      throw InvalidInterval("interval " + to_string(iv.lo) + ".." +
                            to_string(iv.hi) + " has lo > hi");
  }
  std::sort(raw.begin(), raw.end(), [](const Interval& a, const Interval& b) {
    return a.lo != b.lo ? a.lo < b.lo : a.hi < b.hi;
  });
  IntervalSet out;
  for (const Interval& iv : raw) {
    if (!out.intervals_.empty()) {
      Interval& last = out.intervals_.back();
      // Merge overlap and adjacency; the lo - 1 form cannot underflow
      // (lo >= 1) and avoids hi + 1 overflowing at the top of the range.
      if (iv.lo <= last.hi || iv.lo - Nat(1) == last.hi) {
        last.hi = std::max(last.hi, iv.hi);
        continue;
      }
    }
    out.intervals_.push_back(iv);
  }
  return out;
}

Interval interval_sum_range(Nat a, Nat b, Nat k) {
  if (k < Nat(1)) throw NotEnoughElements("k must be >= 1");
  if (a < Nat(1)) throw InvalidInterval("interval lower bound must be >= 1");
  if (b < a || b - a + Nat(1) < k)
    throw NotEnoughElements("interval " + to_string(a) + ".." + to_string(b) +
                            " holds fewer than " + to_string(k) +
                            " distinct elements");
  const Nat offset = choose_two(k);
  return {k * a + offset, k * b - offset};
}

}  // namespace selfsum
