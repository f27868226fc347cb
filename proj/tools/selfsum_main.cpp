#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "selfsum/cli.hpp"
#include "selfsum/json_io.hpp"
#include "selfsum/output.hpp"
#include "selfsum/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitOverflowOrCap = 3;

std::uint64_t oracle_cap_from_env() {
  const char* env = std::getenv("SELFSUM_ORACLE_CAP");
  if (env == nullptr || *env == '\0') return selfsum::kDefaultOracleCap;
  return selfsum::to_u64(selfsum::parse_nat(env));
}

}  // namespace

int main(int argc, char** argv) {
  using selfsum::Nat;

  CLI::App app{
      "Q(n): the finite complement of the largest set of naturals in which "
      "every member is a sum of n distinct naturals drawn all from inside "
      "or all from outside the set"};
  app.require_subcommand(1);

  std::string n_arg, x_arg, n_min_arg, n_max_arg;
  std::string oracle_max_arg = "0";
  std::string limit_arg;
  std::string format_arg = "intervals";
  bool explain = false;
  std::vector<std::string> bench_ns;
  std::uint64_t reps = 10;

  CLI::App* compute = app.add_subcommand(
      "compute", "Compute Q(n) and print it in the chosen format");
  compute->add_option("--n", n_arg, "problem parameter, n >= 2")->required();
  compute->add_option("--format", format_arg,
                      "list | intervals | json | bfile");
  compute->add_flag("--explain", explain,
                    "print the landmark narrative before the output");

  CLI::App* member = app.add_subcommand(
      "member", "Decide whether x belongs to the member set for n");
  member->add_option("--n", n_arg)->required();
  member->add_option("--x", x_arg)->required();

  CLI::App* verify = app.add_subcommand(
      "verify",
      "Check certificates (and, up to --oracle-max-n, sieve agreement) "
      "over a range of n; one JSON report per line");
  verify->add_option("--n-min", n_min_arg)->required();
  verify->add_option("--n-max", n_max_arg)->required();
  verify->add_option("--oracle-max-n", oracle_max_arg,
                     "cross-validate against the sieve for n up to this");

  CLI::App* oracle = app.add_subcommand(
      "oracle", "Run the brute-force sieve to a limit and print both sides");
  oracle->add_option("--n", n_arg)->required();
  oracle->add_option("--limit", limit_arg)->required();

  CLI::App* bench = app.add_subcommand(
      "bench", "Time the constant-arithmetic path (and the sieve for n <= 8)");
  bench->add_option("--n", bench_ns, "comma-separated list of n")
      ->required()
      ->delimiter(',');
  bench->add_option("--reps", reps, "measurements per n");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const std::uint64_t cap = oracle_cap_from_env();

    if (compute->parsed()) {
      const auto format = selfsum::parse_output_format(format_arg);
      if (!format) {
        std::cerr << "unknown format '" << format_arg
                  << "' (expected list, intervals, json, or bfile)\n";
        return kExitUsage;
      }
      std::cout << selfsum::run_compute(selfsum::parse_nat(n_arg), *format,
                                        explain, cap);
      return kExitOk;
    }

    if (member->parsed()) {
      const selfsum::MemberAnswer answer = selfsum::run_member(
          selfsum::parse_nat(n_arg), selfsum::parse_nat(x_arg), cap);
      std::cout << (answer.is_member ? "member" : "non-member") << ": "
                << answer.explanation << "\n";
      return kExitOk;
    }

    if (verify->parsed()) {
      return selfsum::run_verify(selfsum::parse_nat(n_min_arg),
                                 selfsum::parse_nat(n_max_arg),
                                 selfsum::parse_nat(oracle_max_arg), std::cout,
                                 cap) == 0
                 ? kExitOk
                 : kExitVerificationFailed;
    }

    if (oracle->parsed()) {
      const selfsum::SieveState state = selfsum::sieve_to_limit(
          selfsum::parse_nat(n_arg), selfsum::parse_nat(limit_arg), cap);
      std::cout << "members: " << selfsum::format_intervals(state.members())
                << "\n"
                << "non-members: "
                << selfsum::format_intervals(state.non_members()) << "\n";
      return kExitOk;
    }

    if (bench->parsed()) {
      std::vector<Nat> ns;
      ns.reserve(bench_ns.size());
      for (const std::string& s : bench_ns) ns.push_back(selfsum::parse_nat(s));
      std::cout << selfsum::run_bench(ns, reps, cap);
      return kExitOk;
    }
  } catch (const selfsum::OverflowError& e) {
    std::cerr << "overflow: " << e.what() << "\n";
    return kExitOverflowOrCap;
  } catch (const selfsum::OracleCapExceeded& e) {
    std::cerr << "oracle cap: " << e.what() << "\n";
    return kExitOverflowOrCap;
  } catch (const selfsum::ElementDumpTooLarge& e) {
    std::cerr << e.what() << "\n";
    return kExitOverflowOrCap;
  } catch (const selfsum::BadN& e) {
    std::cerr << "bad n: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "bad argument: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
  return kExitUsage;
}
