#pragma once

#include <cstdint>
#include <string>

#include "selfsum/interval_set.hpp"
#include "selfsum/maximal_set_result.hpp"
#include "selfsum/nat.hpp"
#include "selfsum/oracle_sieve.hpp"

namespace selfsum {

// Landmark values that pin down the member set in constant arithmetic.
//
// Writing T for the least member n(n+1)/2: the naturals 1..T-1 are
// non-members; their n-element sums fill the contiguous member block
// [first_member, first_block_top]. The next stretch
// [first_block_top + 1, run_start - 1] is a second non-member gap: too
// small for any sum of n distinct members, too large for n distinct
// small non-members, and any mix of members and non-members is excluded
// by the rule. Sums of n-1 small non-members plus one gap element then
// cover [run_start, mixed_sum_top], sums of n distinct members of the
// first block cover [member_sum_low, member_sum_high], and when the two
// stretches merge into one run of at least required_run_length members,
// the run feeds on itself forever: every natural >= run_start is a
// member, and the complement is exactly the two gaps.
//
// The scalar is a template parameter so validation code can rebuild the
// certificate with a narrow shim and exercise the overflow paths.
template <class N>
struct BasicCertificate {
  N n;
  N first_member;         // least member, n(n+1)/2
  N first_block_top;      // top of the first member block, (n-1) * first_member
  N run_start;            // first member above the second gap
  N required_run_length;  // sum of the first n-1 members
  N mixed_sum_top_bound;  // run top reachable with the n-1 smallest non-members
  N mixed_sum_top;        // exact top of the mixed-sum member run
  N member_sum_low;       // least sum of n distinct first-block members
  N member_sum_high;      // greatest such sum
  N run_length;           // member_sum_high - run_start + 1

  friend bool operator==(const BasicCertificate&,
                         const BasicCertificate&) = default;
};

using ClosedFormCertificate = BasicCertificate<Nat>;

// Least member of the set: the sum 1 + 2 + ... + n. Throws BadN for n < 2.
Nat first_member(Nat n);

template <class N>
BasicCertificate<N> build_certificate_for(N n) {
  if (n < N(2)) throw BadN("n must be >= 2, got " + to_string(n));
  const N one = 1;
  BasicCertificate<N> c;
  c.n = n;
  const auto field = [](const char* name, auto&& compute) {
    try {
      return compute();
    } catch (const OverflowError& e) {
      throw OverflowError(std::string("certificate field '") + name +
                          "' overflows: " + e.what());
    }
  };
  c.first_member = field("first_member", [&] { return triangular(n); });
  c.first_block_top =
      field("first_block_top", [&] { return (n - one) * c.first_member; });
  c.run_start = field("run_start",
                      [&] { return choose_two(n) + c.first_block_top + one; });
  c.required_run_length = field("required_run_length", [&] {
    return (n - one) * c.first_member + choose_two(n - one);
  });
  c.mixed_sum_top_bound = field("mixed_sum_top_bound", [&] {
    return choose_two(n) + c.run_start - one;
  });
  c.mixed_sum_top = field("mixed_sum_top", [&] {
    return (n - one) * c.first_member - choose_two(n) + c.run_start - one;
  });
  c.member_sum_low = field("member_sum_low",
                           [&] { return n * c.first_member + choose_two(n); });
  c.member_sum_high = field("member_sum_high", [&] {
    return n * c.first_block_top - choose_two(n);
  });
  c.run_length =
      field("run_length", [&] { return c.member_sum_high - c.run_start + one; });
  return c;
}

ClosedFormCertificate build_certificate(Nat n);

// True iff the two member stretches merge into one contiguous run that is
// long enough to extend indefinitely:
//   (i)  member_sum_low starts at or before mixed_sum_top + 1,
//   (ii) the merged run tops out at member_sum_high,
//   (iii) the run holds at least required_run_length members.
// False is a valid outcome (n = 2 fails (iii)).
template <class N>
bool verify_certificate(const BasicCertificate<N>& c) {
  const bool merges = c.member_sum_low <= c.mixed_sum_top ||
                      c.member_sum_low - N(1) == c.mixed_sum_top;
  const bool member_sums_on_top = c.member_sum_high >= c.mixed_sum_top;
  const bool long_enough = c.run_length >= c.required_run_length;
  return merges && member_sums_on_top && long_enough;
}

// The complement read straight off a verified certificate: the two
// non-member gaps, with every natural >= run_start a member. Throws
// CertificateFailed when the certificate does not verify.
MaximalSetResult closed_form_q(const ClosedFormCertificate& c);
MaximalSetResult closed_form_q(Nat n);

// Closed form when the certificate verifies, ascending sieve otherwise
// (n = 2 is the one known fallback). Both paths agree wherever both apply.
MaximalSetResult compute_q(Nat n, std::uint64_t oracle_cap = kDefaultOracleCap);

// Dispatch seam: same as compute_q but on a caller-supplied certificate,
// so the sieve fallback can be exercised with a doctored one.
MaximalSetResult compute_q_with_certificate(
    const ClosedFormCertificate& c,
    std::uint64_t oracle_cap = kDefaultOracleCap);

}  // namespace selfsum
