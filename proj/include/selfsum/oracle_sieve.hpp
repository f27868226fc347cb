#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "selfsum/interval_set.hpp"
#include "selfsum/maximal_set_result.hpp"
#include "selfsum/nat.hpp"

namespace selfsum {

// Largest value a sieve will decide before refusing with OracleCapExceeded.
// Overridable per call; the CLI reads SELFSUM_ORACLE_CAP.
inline constexpr std::uint64_t kDefaultOracleCap = 10'000'000;

// True iff some n pairwise-distinct elements of `pool` sum to exactly x.
// Subset-sum feasibility DP over (element, count, partial sum), with one
// bit row per count so each element is used at most once. Elements above
// x are ignored. Throws OracleCapExceeded when x exceeds `cap`.
bool exists_n_distinct_sum(const IntervalSet& pool, Nat n, Nat x,
                           std::uint64_t cap = kDefaultOracleCap);

// Ascending first-principles evaluation of the membership rule: x is a
// member iff it is a sum of n pairwise-distinct naturals that are all
// members or all non-members. Each summand of x is below x, so deciding
// in ascending order needs no forward references. Single-owner mutable
// while sieving; immutable and shareable once done.
class SieveState {
 public:
  explicit SieveState(Nat n, std::uint64_t cap = kDefaultOracleCap);

  Nat n() const { return n_; }
  std::uint64_t cap() const { return cap_; }

  // Largest x whose membership is decided (0 before the first step).
  Nat frontier() const { return Nat(frontier_); }

  // pre: 1 <= x <= frontier()
  bool is_member(Nat x) const;

  const IntervalSet& members() const { return members_; }
  const IntervalSet& non_members() const { return non_members_; }

  // Maximal run of consecutive members ending at the frontier; length 0
  // when the frontier is a non-member (or nothing is decided yet).
  Nat trailing_run_length() const { return Nat(run_length_); }
  Nat trailing_run_start() const;  // pre: trailing_run_length() > 0

  // Run length that forces all later naturals in: the sum of the first
  // n-1 members. Unset until n-1 members have been discovered.
  std::optional<Nat> z() const { return z_; }

  // Decide membership of frontier()+1 from the defining rule.
  void decide_next();

 private:
  Nat n_;
  std::uint64_t n_small_;
  std::uint64_t cap_;
  std::uint64_t frontier_ = 0;
  std::vector<std::uint8_t> membership_;  // membership_[x-1]
  IntervalSet members_;
  IntervalSet non_members_;
  std::uint64_t run_start_ = 0;
  std::uint64_t run_length_ = 0;
  std::uint64_t early_member_count_ = 0;
  Nat early_member_sum_ = 0;
  std::optional<Nat> z_;
};

// Decide every x in 1..limit. Deterministic.
SieveState sieve_to_limit(Nat n, Nat limit,
                          std::uint64_t cap = kDefaultOracleCap);

// Sieve ascending until a run of z consecutive members starts above the
// (n-1)-th member; from there every larger natural is a member, so the
// non-members seen so far are the whole complement.
MaximalSetResult sieve_until_run(Nat n, std::uint64_t cap = kDefaultOracleCap);

}  // namespace selfsum
