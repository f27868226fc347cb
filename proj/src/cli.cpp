#include "selfsum/cli.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

#include "selfsum/json_io.hpp"
#include "selfsum/output.hpp"
#include "selfsum/stopwatch.hpp"
#include "selfsum/verify.hpp"

namespace selfsum {

namespace {

std::string range_text(Nat lo, Nat hi) {
  if (lo == hi) return to_string(lo);
  return to_string(lo) + ".." + to_string(hi);
}

// "1+2+...+k", spelled out when short.
std::string prefix_sum_text(Nat k) {
  if (k == Nat(1)) return "1";
  if (k == Nat(2)) return "1+2";
  if (k == Nat(3)) return "1+2+3";
  return "1+2+...+" + to_string(k);
}

std::string format_seconds(double s) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  if (s < 1e-6)
    os << s * 1e9 << " ns";
  else if (s < 1e-3)
    os << s * 1e6 << " us";
  else if (s < 1.0)
    os << s * 1e3 << " ms";
  else
    os << s << " s";
  return os.str();
}

// Pick a batch size large enough that one measurement is well above
// clock resolution, then report min and mean per-call time over `reps`
// measurements.
template <class F>
std::pair<double, double> time_per_call(std::uint64_t reps, F&& fn) {
  std::uint64_t batch = 1;
  for (;;) {
    Stopwatch sw;
    for (std::uint64_t i = 0; i < batch; ++i) fn();
    if (sw.seconds() >= 50e-6 || batch >= (1u << 20)) break;
    batch <<= 1;
  }
  double best = std::numeric_limits<double>::infinity();
  double total = 0.0;
  for (std::uint64_t r = 0; r < std::max<std::uint64_t>(reps, 1); ++r) {
    Stopwatch sw;
    for (std::uint64_t i = 0; i < batch; ++i) fn();
    const double per_call = sw.seconds() / static_cast<double>(batch);
    best = std::min(best, per_call);
    total += per_call;
  }
  return {best, total / static_cast<double>(std::max<std::uint64_t>(reps, 1))};
}

volatile std::uint64_t bench_sink = 0;

}  // namespace

std::optional<OutputFormat> parse_output_format(std::string_view name) {
  if (name == "list") return OutputFormat::List;
  if (name == "intervals") return OutputFormat::Intervals;
  if (name == "json") return OutputFormat::Json;
  if (name == "bfile") return OutputFormat::BFile;
  return std::nullopt;
}

std::string explain_text(const ClosedFormCertificate& c,
                         const MaximalSetResult& result) {
  const Nat one = 1;
  std::ostringstream os;
  os << "n = " << c.n << "\n";
  os << "least member: " << c.first_member << " (the sum "
     << prefix_sum_text(c.n) << ")\n";
  os << "non-members below it: " << range_text(one, c.first_member - one)
     << "\n";
  os << "sums of " << c.n << " distinct elements of "
     << range_text(one, c.first_member - one) << " cover "
     << range_text(c.first_member, c.first_block_top) << ", all members\n";
  os << c.first_block_top + one
     << " is not a member: every way to reach it mixes members with "
        "non-members\n";
  os << "second non-member gap: "
     << range_text(c.first_block_top + one, c.run_start - one) << "\n";
  os << "first member above the gap: " << c.run_start << " ("
     << prefix_sum_text(c.n - one) << " plus " << c.first_block_top + one
     << ")\n";
  os << "sums of " << c.n - one << " small non-member"
     << (c.n - one == Nat(1) ? "" : "s")
     << " plus one gap element cover "
     << range_text(c.run_start, c.mixed_sum_top) << "\n";
  if (c.member_sum_low <= c.member_sum_high)
    os << "sums of " << c.n << " distinct members of "
       << range_text(c.first_member, c.first_block_top) << " cover "
       << range_text(c.member_sum_low, c.member_sum_high) << "\n";
  else
    os << "the block " << range_text(c.first_member, c.first_block_top)
       << " is too short for " << c.n << " distinct members\n";
  if (verify_certificate(c)) {
    os << "the runs merge into "
       << range_text(c.run_start, c.member_sum_high) << ": " << c.run_length
       << " consecutive members, " << c.required_run_length << " required\n";
    os << "certificate holds: every natural >= " << c.run_start
       << " is a member\n";
  } else {
    os << "certificate fails (" << c.run_length
       << " consecutive members from " << c.run_start << ", "
       << c.required_run_length
       << " required); computed by the ascending sieve instead\n";
    os << "sieve found: every natural >= " << result.all_members_from
       << " is a member\n";
  }
  os << "Q(" << c.n << ") = " << format_intervals(result.q) << " ("
     << result.q.cardinality() << " elements)\n";
  return os.str();
}

std::string run_compute(Nat n, OutputFormat format, bool explain,
                        std::uint64_t oracle_cap) {
  const ClosedFormCertificate cert = build_certificate(n);
  const MaximalSetResult result = compute_q_with_certificate(cert, oracle_cap);
  std::string out;
  if (explain) out += explain_text(cert, result) + "\n";
  switch (format) {
    case OutputFormat::List:
      out += format_list(result.q) + "\n";
      break;
    case OutputFormat::Intervals:
      out += format_intervals(result.q) + "\n";
      break;
    case OutputFormat::Json:
      out += output_to_json(make_output_document(result)).dump() + "\n";
      break;
    case OutputFormat::BFile:
      out += format_bfile(result.q);
      break;
  }
  return out;
}

MemberAnswer run_member(Nat n, Nat x, std::uint64_t oracle_cap) {
  if (x < Nat(1)) throw std::invalid_argument("x must be >= 1");
  const MaximalSetResult result = compute_q(n, oracle_cap);
  std::ostringstream os;
  if (result.q.contains(x)) {
    for (const Interval& iv : result.q.intervals()) {
      if (iv.lo <= x && x <= iv.hi) {
        os << x << " is not a member: it lies in the non-member range "
           << range_text(iv.lo, iv.hi) << " of Q(" << n << ")";
        break;
      }
    }
    return {false, os.str()};
  }
  if (x >= result.all_members_from) {
    os << x << " is a member: every natural >= " << result.all_members_from
       << " is one";
    return {true, os.str()};
  }
  Nat block_lo = 1;
  Nat block_hi = result.all_members_from - Nat(1);
  for (const Interval& iv : result.q.intervals()) {
    if (iv.hi < x) block_lo = iv.hi + Nat(1);
    if (iv.lo > x) {
      block_hi = iv.lo - Nat(1);
      break;
    }
  }
  os << x << " is a member: it lies in the member block "
     << range_text(block_lo, block_hi);
  return {true, os.str()};
}

int run_verify(Nat n_min, Nat n_max, Nat oracle_max_n, std::ostream& reports,
               std::uint64_t oracle_cap) {
  if (n_min < Nat(2) || n_min > n_max)
    throw BadN("verify requires 2 <= n_min <= n_max");
  bool all_passed = true;
  std::optional<Nat> previous_slack;
  for (Nat n = n_min;; n += Nat(1)) {
    VerificationReport r;
    try {
      if (n <= oracle_max_n) {
        const Nat margin = build_certificate(n).required_run_length;
        r = cross_validate(n, margin, oracle_cap);
      } else {
        r = check_certificate(n);
      }
    } catch (const OverflowError& e) {
      r = VerificationReport{};
      r.n = n;
      r.error = e.what();
    }
    if (r.run_slack) {
      if (previous_slack && !(*r.run_slack > *previous_slack))
        r.slack_monotone_ok = false;
      previous_slack = r.run_slack;
    }
    all_passed = all_passed && report_passed(r);
    reports << report_to_json(r).dump() << "\n";
    if (n == n_max) break;
  }
  return all_passed ? 0 : 1;
}

std::string run_bench(const std::vector<Nat>& ns, std::uint64_t repetitions,
                      std::uint64_t oracle_cap) {
  std::ostringstream os;
  os << "              n  method           reps   compute(min)   "
        "compute(mean)  sieve\n";
  double fastest = std::numeric_limits<double>::infinity();
  double slowest = 0.0;
  for (Nat n : ns) {
    const MaximalSetResult probe = compute_q(n, oracle_cap);
    bench_sink = bench_sink + to_u64(probe.all_members_from % Nat(1u << 30));
    const auto [mn, mean] = time_per_call(repetitions, [&] {
      const MaximalSetResult r = compute_q(n, oracle_cap);
      bench_sink = bench_sink + static_cast<std::uint64_t>(r.q.intervals().size());
    });
    if (probe.method == ComputeMethod::ClosedForm) {
      fastest = std::min(fastest, mn);
      slowest = std::max(slowest, mn);
    }
    std::string oracle_cell = "-";
    if (n <= Nat(8)) {
      Stopwatch sw;
      const MaximalSetResult o = sieve_until_run(n, oracle_cap);
      bench_sink = bench_sink + static_cast<std::uint64_t>(o.q.intervals().size());
      oracle_cell = format_seconds(sw.seconds());
    }
    os.width(15);
    os << to_string(n);
    os << "  ";
    os.setf(std::ios::left, std::ios::adjustfield);
    os.width(15);
    os << method_name(probe.method);
    os.unsetf(std::ios::adjustfield);
    os.width(6);
    os << repetitions;
    os.width(15);
    os << format_seconds(mn);
    os.width(16);
    os << format_seconds(mean);
    os << "  " << oracle_cell << "\n";
  }
  if (slowest > 0.0 && std::isfinite(fastest))
    os << "closed-form spread across listed n: "
       << (fastest > 0.0 ? slowest / fastest : 0.0) << "x\n";
  return os.str();
}

}  // namespace selfsum
