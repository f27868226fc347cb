#include "selfsum/oracle_sieve.hpp"

#include <stdexcept>

namespace selfsum {

namespace {

// dst |= src << shift, over equal-length little-endian word arrays.
// Bits shifted past the end are discarded; they can only move further
// up on later shifts, so they never reach a queried position.
void or_shifted(std::vector<std::uint64_t>& dst,
                const std::vector<std::uint64_t>& src, std::uint64_t shift) {
  const std::size_t words = dst.size();
  const std::size_t word_off = static_cast<std::size_t>(shift / 64);
  const unsigned bit = static_cast<unsigned>(shift % 64);
  if (word_off >= words) return;
  if (bit == 0) {
    for (std::size_t i = words; i-- > word_off;) dst[i] |= src[i - word_off];
  } else {
    for (std::size_t i = words; i-- > word_off;) {
      std::uint64_t v = src[i - word_off] << bit;
      if (i - word_off > 0) v |= src[i - word_off - 1] >> (64 - bit);
      dst[i] |= v;
    }
  }
}

bool test_bit(const std::vector<std::uint64_t>& row, std::uint64_t pos) {
  return (row[pos / 64] >> (pos % 64)) & 1u;
}

}  // namespace

bool exists_n_distinct_sum(const IntervalSet& pool, Nat n, Nat x,
                           std::uint64_t cap) {
  if (n < Nat(1)) throw BadN("summand count must be >= 1");
  if (x > Nat(cap))
    throw OracleCapExceeded("x = " + to_string(x) +
                            " exceeds the oracle cap " + to_string(Nat(cap)));
  if (x < Nat(1)) return false;
  // The least sum of n distinct naturals is 1+2+...+n; past that, no
  // subset can land on x and the DP table is not worth allocating. The
  // n > x test keeps triangular() within range for any n.
  if (n > x || triangular(n) > x) return false;

  const std::uint64_t target = to_u64(x);
  const std::uint64_t count = to_u64(n);
  const std::size_t words = static_cast<std::size_t>(target / 64 + 1);

  // rows[c] = bitset of sums achievable with exactly c distinct elements.
  std::vector<std::vector<std::uint64_t>> rows(
      count + 1, std::vector<std::uint64_t>(words, 0));
  rows[0][0] = 1;

  std::uint64_t filled = 0;
  for (const Interval& iv : pool.intervals()) {
    if (iv.lo > x) break;
    const std::uint64_t lo = to_u64(iv.lo);
    const std::uint64_t hi = to_u64(iv.hi < x ? iv.hi : x);
    for (std::uint64_t e = lo; e <= hi; ++e) {
      // Highest count first so this element joins each subset once.
      for (std::uint64_t c = std::min(count, filled + 1); c >= 1; --c)
        or_shifted(rows[c], rows[c - 1], e);
      filled = std::min(count, filled + 1);
    }
  }
  return test_bit(rows[count], target);
}

SieveState::SieveState(Nat n, std::uint64_t cap) : n_(n), cap_(cap) {
  if (n < Nat(2)) throw BadN("sieve requires n >= 2, got " + to_string(n));
  n_small_ = to_u64(n);
}

bool SieveState::is_member(Nat x) const {
  if (x < Nat(1) || x > Nat(frontier_))
    throw std::out_of_range("membership of " + to_string(x) +
                            " is not decided (frontier " +
                            to_string(Nat(frontier_)) + ")");
  return membership_[to_u64(x) - 1] != 0;
}

Nat SieveState::trailing_run_start() const {
  if (run_length_ == 0) throw std::logic_error("no trailing member run");
  return Nat(run_start_);
}

void SieveState::decide_next() {
  const std::uint64_t x = frontier_ + 1;
  if (x > cap_)
    throw OracleCapExceeded("sieve for n = " + to_string(n_) +
                            " reached its cap of " + to_string(Nat(cap_)) +
                            " decided values");
  const bool member = exists_n_distinct_sum(members_, n_, Nat(x), cap_) ||
                      exists_n_distinct_sum(non_members_, n_, Nat(x), cap_);
  membership_.push_back(member ? 1 : 0);
  frontier_ = x;
  if (member) {
    members_.append(Nat(x));
    if (run_length_ == 0) run_start_ = x;
    ++run_length_;
    if (!z_ && early_member_count_ < n_small_ - 1) {
      early_member_sum_ += Nat(x);
      if (++early_member_count_ == n_small_ - 1) z_ = early_member_sum_;
    }
  } else {
    non_members_.append(Nat(x));
    run_length_ = 0;
  }
}

SieveState sieve_to_limit(Nat n, Nat limit, std::uint64_t cap) {
  if (limit < Nat(1)) throw std::invalid_argument("sieve limit must be >= 1");
  SieveState state(n, cap);
  while (state.frontier() < limit) state.decide_next();
  return state;
}

MaximalSetResult sieve_until_run(Nat n, std::uint64_t cap) {
  SieveState state(n, cap);
  // The run must start above the (n-1)-th member so its first element is
  // distinct from the n-1 members whose sum is z; only then does
  // run-start + z land on a sum of n distinct members and the run extend
  // indefinitely.
  const Nat run_floor = triangular(n) + n - Nat(2);
  for (;;) {
    state.decide_next();
    if (state.z() && state.trailing_run_length() >= *state.z() &&
        state.trailing_run_start() > run_floor) {
      return {n, state.non_members(), state.trailing_run_start(),
              ComputeMethod::IterativeSieve};
    }
  }
}

}  // namespace selfsum
