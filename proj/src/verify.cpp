#include "selfsum/verify.hpp"

#include "selfsum/oracle_sieve.hpp"
#include "selfsum/stopwatch.hpp"

namespace selfsum {

namespace {

Nat expected_cardinality(Nat n) { return n * n - Nat(1); }

Nat expected_max(Nat n) { return choose_two(n) * (n + Nat(2)); }

// Certificate verdict plus the closed-form formula checks for a computed
// result. The formulas bind only the closed-form output; a sieve-derived
// result has nothing to test against them.
void fill_certificate_checks(VerificationReport& r,
                             const MaximalSetResult& result) {
  r.method = result.method;
  const ClosedFormCertificate c = build_certificate(r.n);
  r.certificate_ok = verify_certificate(c);
  if (r.certificate_ok) {
    r.run_length = c.run_length;
    r.run_slack = c.run_length - c.required_run_length;
  }
  if (result.method == ComputeMethod::ClosedForm) {
    r.q_cardinality_ok = result.q.cardinality() == expected_cardinality(r.n);
    r.q_max_ok = !result.q.empty() && result.q.max() == expected_max(r.n);
  } else {
    r.q_cardinality_ok = true;
    r.q_max_ok = true;
  }
}

}  // namespace

bool report_passed(const VerificationReport& r) {
  if (!r.error.empty()) return false;
  if (r.n >= Nat(3) && !r.certificate_ok) return false;
  if (!r.q_cardinality_ok || !r.q_max_ok) return false;
  if (!r.slack_monotone_ok) return false;
  if (r.oracle_checked && !r.oracle_agrees) return false;
  return true;
}

VerificationReport cross_validate(Nat n, Nat margin, std::uint64_t cap) {
  VerificationReport r;
  r.n = n;

  Stopwatch sw;
  const MaximalSetResult result = compute_q(n, cap);
  r.closed_form_seconds = sw.seconds();
  fill_certificate_checks(r, result);

  const Nat limit = result.all_members_from + margin;
  sw.restart();
  const SieveState sieve = sieve_to_limit(n, limit, cap);
  r.oracle_seconds = sw.seconds();

  r.oracle_checked = true;
  r.oracle_agrees = true;
  for (Nat x = 1; x <= limit; x += Nat(1)) {
    const bool closed_form_member = !result.q.contains(x);
    if (closed_form_member != sieve.is_member(x)) {
      r.oracle_agrees = false;
      r.first_divergence = x;
      break;
    }
  }
  return r;
}

VerificationReport check_certificate(Nat n) {
  VerificationReport r;
  r.n = n;
  Stopwatch sw;
  const MaximalSetResult result = compute_q(n);
  r.closed_form_seconds = sw.seconds();
  fill_certificate_checks(r, result);
  return r;
}

void sweep_certificates(
    Nat n_min, Nat n_max,
    const std::function<void(const VerificationReport&)>& sink) {
  if (n_min < Nat(3) || n_min > n_max)
    throw BadN("sweep requires 3 <= n_min <= n_max");
  std::optional<Nat> previous_slack;
  for (Nat n = n_min;; n += Nat(1)) {
    VerificationReport r;
    try {
      r = check_certificate(n);
    } catch (const OverflowError& e) {
      throw OverflowError("n = " + to_string(n) + ": " + e.what());
    }
    if (r.run_slack) {
      if (previous_slack && !(*r.run_slack > *previous_slack))
        r.slack_monotone_ok = false;
      previous_slack = r.run_slack;
    }
    sink(r);
    if (n == n_max) break;
  }
}

std::vector<VerificationReport> sweep_certificates(Nat n_min, Nat n_max) {
  std::vector<VerificationReport> out;
  sweep_certificates(n_min, n_max,
                     [&](const VerificationReport& r) { out.push_back(r); });
  return out;
}

}  // namespace selfsum
