#pragma once

#include <cstdint>

#include <json.hpp>

#include "selfsum/nat.hpp"
#include "selfsum/verify.hpp"

namespace selfsum {

// Largest integer every JSON consumer reads exactly (2^53 - 1); anything
// above it is emitted as a decimal string.
inline constexpr std::uint64_t kMaxExactJsonInteger =
    (std::uint64_t{1} << 53) - 1;

nlohmann::json nat_to_json(Nat v);

// Accepts either encoding. Throws std::invalid_argument on anything that
// is not a non-negative integer or a decimal string.
Nat nat_from_json(const nlohmann::json& j);

// One verification report as a single JSON object (one line in the
// verify subcommand's stream). oracle_agrees is null when the oracle
// did not run.
nlohmann::json report_to_json(const VerificationReport& r);

}  // namespace selfsum
