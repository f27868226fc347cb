#include "selfsum/json_io.hpp"

#include <stdexcept>

namespace selfsum {

nlohmann::json nat_to_json(Nat v) {
  if (v <= Nat(kMaxExactJsonInteger)) return to_u64(v);
  return to_string(v);
}

Nat nat_from_json(const nlohmann::json& j) {
  if (j.is_string()) return parse_nat(j.get<std::string>());
  if (j.is_number_unsigned()) return Nat(j.get<std::uint64_t>());
  if (j.is_number_integer()) {
    const auto v = j.get<std::int64_t>();
    if (v < 0) throw std::invalid_argument("negative value is not a natural");
    return Nat(static_cast<std::uint64_t>(v));
  }
  throw std::invalid_argument("expected a natural as number or string, got " +
                              j.dump());
}

nlohmann::json report_to_json(const VerificationReport& r) {
  nlohmann::json j;
  j["n"] = nat_to_json(r.n);
  j["method"] = method_name(r.method);
  j["certificate_ok"] = r.certificate_ok;
  j["q_cardinality_ok"] = r.q_cardinality_ok;
  j["q_max_ok"] = r.q_max_ok;
  if (r.run_length) j["run_length"] = nat_to_json(*r.run_length);
  if (r.run_slack) j["run_slack"] = nat_to_json(*r.run_slack);
  j["slack_monotone_ok"] = r.slack_monotone_ok;
  j["oracle_checked"] = r.oracle_checked;
  j["oracle_agrees"] =
      r.oracle_checked ? nlohmann::json(r.oracle_agrees) : nullptr;
  j["first_divergence"] =
      r.first_divergence ? nat_to_json(*r.first_divergence) : nullptr;
  j["timings"] = {{"closed_form_seconds", r.closed_form_seconds},
                  {"oracle_seconds", r.oracle_seconds}};
  if (!r.error.empty()) j["error"] = r.error;
  j["passed"] = report_passed(r);
  return j;
}

}  // namespace selfsum
