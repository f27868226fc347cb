#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "selfsum/closed_form.hpp"
#include "selfsum/nat.hpp"
#include "selfsum/oracle_sieve.hpp"

namespace selfsum {

enum class OutputFormat { List, Intervals, Json, BFile };

std::optional<OutputFormat> parse_output_format(std::string_view name);

// Text for `compute`: the complement of the member set for n, in the
// requested format, optionally preceded by a step-by-step account of the
// landmark values. Always ends with a newline.
std::string run_compute(Nat n, OutputFormat format, bool explain = false,
                        std::uint64_t oracle_cap = kDefaultOracleCap);

struct MemberAnswer {
  bool is_member;
  std::string explanation;
};

// Membership of a single x, answered from the computed complement.
MemberAnswer run_member(Nat n, Nat x,
                        std::uint64_t oracle_cap = kDefaultOracleCap);

// One JSON report line per n in [n_min, n_max]; ns up to oracle_max_n are
// cross-validated against the sieve, the rest get certificate-only
// checks. Returns 0 when every report passes, 1 otherwise.
int run_verify(Nat n_min, Nat n_max, Nat oracle_max_n, std::ostream& reports,
               std::uint64_t oracle_cap = kDefaultOracleCap);

// Timing table for the constant-arithmetic path (and, for n <= 8, the
// sieve) demonstrating that the closed form costs the same regardless
// of n.
std::string run_bench(const std::vector<Nat>& ns, std::uint64_t repetitions,
                      std::uint64_t oracle_cap = kDefaultOracleCap);

// The narrative behind a result: landmarks, gap ranges, merge verdict.
std::string explain_text(const ClosedFormCertificate& c,
                         const MaximalSetResult& result);

}  // namespace selfsum
