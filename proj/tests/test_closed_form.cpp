#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <string>
#include <vector>

#include "brute_force.hpp"
#include "selfsum/closed_form.hpp"

using selfsum::build_certificate;
using selfsum::ClosedFormCertificate;
using selfsum::closed_form_q;
using selfsum::compute_q;
using selfsum::ComputeMethod;
using selfsum::first_member;
using selfsum::Nat;
using selfsum::verify_certificate;

namespace {

selfsum::IntervalSet make(
    std::vector<std::pair<std::uint64_t, std::uint64_t>> raw) {
  std::vector<selfsum::Interval> v;
  for (auto [lo, hi] : raw) v.push_back({Nat(lo), Nat(hi)});
  return selfsum::normalize(std::move(v));
}

// Exhaustive top of the contiguous member run that starts at run_start:
// sums of n-1 distinct small non-members plus one second-gap element.
std::uint64_t mixed_run_top_by_enumeration(const ClosedFormCertificate& c) {
  std::vector<std::uint64_t> small;
  for (std::uint64_t e = 1; e < selfsum::to_u64(c.first_member); ++e)
    small.push_back(e);
  const auto partial_sums =
      selfsum::testing::k_subset_sums(small, unsigned(selfsum::to_u64(c.n)) - 1);
  std::set<std::uint64_t> sums;
  for (std::uint64_t gap = selfsum::to_u64(c.first_block_top) + 1;
       gap < selfsum::to_u64(c.run_start); ++gap)
    for (std::uint64_t p : partial_sums) sums.insert(p + gap);
  std::uint64_t top = selfsum::to_u64(c.run_start);
  while (sums.count(top + 1)) ++top;
  return top;
}

}  // namespace

TEST_CASE("first_member is the n-th triangular number") {
  CHECK(first_member(Nat(2)) == Nat(3));
  CHECK(first_member(Nat(4)) == Nat(10));
  CHECK(first_member(Nat(10)) == Nat(55));
  CHECK(first_member(Nat(40)) == Nat(820));
  CHECK_THROWS_AS(first_member(Nat(0)), selfsum::BadN);
  CHECK_THROWS_AS(first_member(Nat(1)), selfsum::BadN);
}

TEST_CASE("certificate landmark values") {
  const auto c4 = build_certificate(Nat(4));
  CHECK(c4.first_member == Nat(10));
  CHECK(c4.first_block_top == Nat(30));
  CHECK(c4.run_start == Nat(37));
  CHECK(c4.required_run_length == Nat(33));
  CHECK(c4.member_sum_low == Nat(46));
  CHECK(c4.member_sum_high == Nat(114));
  CHECK(c4.run_length == Nat(78));
  CHECK(c4.mixed_sum_top == Nat(60));
  CHECK(c4.mixed_sum_top_bound == Nat(42));

  const auto c10 = build_certificate(Nat(10));
  CHECK(c10.first_member == Nat(55));
  CHECK(c10.first_block_top == Nat(495));
  CHECK(c10.run_start == Nat(541));
  CHECK(c10.required_run_length == Nat(531));
  CHECK(c10.member_sum_low == Nat(595));
  CHECK(c10.member_sum_high == Nat(4905));
  CHECK(c10.run_length == Nat(4365));

  const auto c40 = build_certificate(Nat(40));
  CHECK(c40.first_member == Nat(820));
  CHECK(c40.first_block_top == Nat(31980));
  CHECK(c40.run_start == Nat(32761));
  CHECK(c40.required_run_length == Nat(32721));
  CHECK(c40.member_sum_low == Nat(33580));
  CHECK(c40.member_sum_high == Nat(1278420));
  CHECK(c40.run_length == Nat(1245660));

  const auto c3 = build_certificate(Nat(3));
  CHECK(c3.first_member == Nat(6));
  CHECK(c3.first_block_top == Nat(12));
  CHECK(c3.run_start == Nat(16));
  CHECK(c3.required_run_length == Nat(13));
  CHECK(c3.member_sum_low == Nat(21));
  CHECK(c3.member_sum_high == Nat(33));
  CHECK(c3.run_length == Nat(18));

  const auto c2 = build_certificate(Nat(2));
  CHECK(c2.first_member == Nat(3));
  CHECK(c2.first_block_top == Nat(3));
  CHECK(c2.run_start == Nat(5));
  CHECK(c2.required_run_length == Nat(3));
  CHECK(c2.member_sum_low == Nat(7));
  CHECK(c2.member_sum_high == Nat(5));
  CHECK(c2.run_length == Nat(1));

  CHECK_THROWS_AS(build_certificate(Nat(1)), selfsum::BadN);
}

TEST_CASE("mixed_sum_top matches exhaustive enumeration") {
  for (std::uint64_t n = 2; n <= 5; ++n) {
    const auto c = build_certificate(Nat(n));
    CHECK(c.mixed_sum_top == Nat(mixed_run_top_by_enumeration(c)));
  }
  CHECK(build_certificate(Nat(4)).mixed_sum_top == Nat(60));
}

TEST_CASE("certificate internal relations hold across n") {
  for (std::uint64_t n = 2; n <= 120; ++n) {
    const auto c = build_certificate(Nat(n));
    CHECK(c.first_member == selfsum::triangular(Nat(n)));
    CHECK(c.first_block_top == (Nat(n) - Nat(1)) * c.first_member);
    CHECK(c.run_start - c.first_block_top - Nat(1) ==
          selfsum::choose_two(Nat(n)));
    CHECK(c.run_start <= c.mixed_sum_top_bound);
    CHECK(c.mixed_sum_top_bound <= c.mixed_sum_top);
    CHECK(c.member_sum_low - (c.run_start - Nat(1)) == c.first_member);
    // The second gap is unreachable from either side: too small for any
    // sum of n members, and any n non-members using a gap element land
    // at run_start or above.
    CHECK(c.run_start - Nat(1) < c.member_sum_low);
    CHECK(c.first_block_top + Nat(1) <= c.run_start - Nat(1));
  }
}

TEST_CASE("verification verdicts") {
  CHECK(verify_certificate(build_certificate(Nat(3))));
  CHECK(verify_certificate(build_certificate(Nat(4))));
  CHECK(verify_certificate(build_certificate(Nat(10))));
  CHECK(verify_certificate(build_certificate(Nat(40))));
  const auto c2 = build_certificate(Nat(2));
  CHECK(!verify_certificate(c2));
  CHECK(c2.run_length < c2.required_run_length);
}

TEST_CASE("closed_form_q reproduces the known complements") {
  const auto four = closed_form_q(Nat(4));
  CHECK(four.q == make({{1, 9}, {31, 36}}));
  CHECK(four.all_members_from == Nat(37));
  CHECK(four.method == ComputeMethod::ClosedForm);

  CHECK(closed_form_q(Nat(10)).q == make({{1, 54}, {496, 540}}));
  CHECK(closed_form_q(Nat(10)).all_members_from == Nat(541));
  CHECK(closed_form_q(Nat(40)).q == make({{1, 819}, {31981, 32760}}));
  CHECK(closed_form_q(Nat(40)).all_members_from == Nat(32761));
  CHECK(closed_form_q(Nat(5)).q == make({{1, 14}, {61, 70}}));
  CHECK(closed_form_q(Nat(5)).all_members_from == Nat(71));

  CHECK_THROWS_AS(closed_form_q(Nat(2)), selfsum::CertificateFailed);
  CHECK_THROWS_AS(closed_form_q(Nat(1)), selfsum::BadN);
}

TEST_CASE("compute_q dispatches by certificate") {
  const auto two = compute_q(Nat(2));
  CHECK(two.q == make({{1, 2}, {4, 4}, {7, 7}, {10, 10}}));
  CHECK(two.all_members_from == Nat(11));
  CHECK(two.method == ComputeMethod::IterativeSieve);

  const auto three = compute_q(Nat(3));
  CHECK(three.q == make({{1, 5}, {13, 15}}));
  CHECK(three.all_members_from == Nat(16));
  CHECK(three.method == ComputeMethod::ClosedForm);

  CHECK(compute_q(Nat(4)).q == make({{1, 9}, {31, 36}}));
  CHECK_THROWS_AS(compute_q(Nat(0)), selfsum::BadN);
  // A starved cap surfaces through the fallback path.
  CHECK_THROWS_AS(compute_q(Nat(2), /*oracle_cap=*/5),
                  selfsum::OracleCapExceeded);
}

TEST_CASE("sieve fallback stays live: doctored certificate for n = 5") {
  ClosedFormCertificate c = build_certificate(Nat(5));
  c.required_run_length = c.run_length + Nat(1);
  REQUIRE(!verify_certificate(c));
  const auto fallback = selfsum::compute_q_with_certificate(c);
  CHECK(fallback.method == ComputeMethod::IterativeSieve);
  const auto direct = closed_form_q(Nat(5));
  CHECK(fallback.q == direct.q);
  CHECK(fallback.all_members_from == direct.all_members_from);
}

TEST_CASE("closed-form size and maximum formulas") {
  for (std::uint64_t n = 3; n <= 100; ++n) {
    const auto result = closed_form_q(Nat(n));
    CHECK(result.q.cardinality() == Nat(n) * Nat(n) - Nat(1));
    CHECK(result.q.max() ==
          selfsum::choose_two(Nat(n)) * (Nat(n) + Nat(2)));
    CHECK(result.q.max() < result.all_members_from);
  }
}

TEST_CASE("overflow names the certificate field") {
  // Genuine 128-bit overflow: first_member of a 2^100-ish n.
  const Nat enormous = Nat::from_raw(Nat::rep(1) << 100);
  CHECK_THROWS_WITH_AS(build_certificate(enormous),
                       doctest::Contains("first_member"),
                       selfsum::OverflowError);

  // Narrow shim: the same builder on 32 bits fails early with the field
  // name; the full scan lives in the acceptance suite.
  using Narrow = selfsum::CheckedUInt<std::uint32_t>;
  bool threw = false;
  for (std::uint32_t n = 2; n <= 400; ++n) {
    try {
      selfsum::build_certificate_for<Narrow>(Narrow(n));
    } catch (const selfsum::OverflowError& e) {
      threw = true;
      CHECK(std::string(e.what()).find("certificate field") !=
            std::string::npos);
      break;
    }
  }
  CHECK(threw);
}
