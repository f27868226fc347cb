#include "selfsum/closed_form.hpp"

namespace selfsum {

Nat first_member(Nat n) {
  if (n < Nat(2)) throw BadN("n must be >= 2, got " + to_string(n));
  return triangular(n);
}

ClosedFormCertificate build_certificate(Nat n) {
  return build_certificate_for<Nat>(n);
}

MaximalSetResult closed_form_q(const ClosedFormCertificate& c) {
  if (!verify_certificate(c))
    throw CertificateFailed("certificate for n = " + to_string(c.n) +
                            " does not verify; use the iterative sieve");
  const Nat one = 1;
  IntervalSet q = normalize({{one, c.first_member - one},
                             {c.first_block_top + one, c.run_start - one}});
  return {c.n, std::move(q), c.run_start, ComputeMethod::ClosedForm};
}

MaximalSetResult closed_form_q(Nat n) {
  return closed_form_q(build_certificate(n));
}

MaximalSetResult compute_q(Nat n, std::uint64_t oracle_cap) {
  return compute_q_with_certificate(build_certificate(n), oracle_cap);
}

MaximalSetResult compute_q_with_certificate(const ClosedFormCertificate& c,
                                            std::uint64_t oracle_cap) {
  if (verify_certificate(c)) return closed_form_q(c);
  return sieve_until_run(c.n, oracle_cap);
}

}  // namespace selfsum
