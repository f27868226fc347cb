#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "selfsum/interval_set.hpp"
#include "selfsum/maximal_set_result.hpp"
#include "selfsum/nat.hpp"

namespace selfsum {

// Element-by-element formats refuse sets larger than this.
inline constexpr std::uint64_t kElementDumpLimit = 1'000'000;

// Machine-readable summary of one result; round-trips through JSON
// bit-exactly (values above 2^53 - 1 travel as decimal strings).
struct OutputDocument {
  Nat n;
  std::string method;  // "closed-form" | "iterative-sieve"
  std::vector<Interval> q_intervals;
  Nat q_cardinality;
  Nat all_members_from;

  friend bool operator==(const OutputDocument&,
                         const OutputDocument&) = default;
};

OutputDocument make_output_document(const MaximalSetResult& result);

nlohmann::json output_to_json(const OutputDocument& doc);

// Throws std::invalid_argument on missing fields, malformed intervals,
// or a cardinality that does not match the intervals.
OutputDocument output_from_json(const nlohmann::json& j);

// Space-separated ascending elements, the classic listing style.
// Throws ElementDumpTooLarge past kElementDumpLimit elements.
std::string format_list(const IntervalSet& q);

// Human-readable ranges: "1..54, 496..540"; singletons print bare.
std::string format_intervals(const IntervalSet& q);

// OEIS b-file: one "index value" line per element, indices from 1, no
// header. Throws ElementDumpTooLarge past kElementDumpLimit elements.
std::string format_bfile(const IntervalSet& q);

}  // namespace selfsum
