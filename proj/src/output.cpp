#include "selfsum/output.hpp"

#include <stdexcept>

#include "selfsum/json_io.hpp"

namespace selfsum {

namespace {

void require_dumpable(const IntervalSet& q) {
  const Nat size = q.cardinality();
  if (size > Nat(kElementDumpLimit))
    throw ElementDumpTooLarge(
        "set has " + to_string(size) + " elements (limit " +
        to_string(Nat(kElementDumpLimit)) +
        " for element-by-element output); use intervals or json");
}

}  // namespace

OutputDocument make_output_document(const MaximalSetResult& result) {
  return {result.n, method_name(result.method), result.q.intervals(),
          result.q.cardinality(), result.all_members_from};
}

nlohmann::json output_to_json(const OutputDocument& doc) {
  nlohmann::json intervals = nlohmann::json::array();
  for (const Interval& iv : doc.q_intervals)
    intervals.push_back({nat_to_json(iv.lo), nat_to_json(iv.hi)});
  return {{"n", nat_to_json(doc.n)},
          {"method", doc.method},
          {"q_intervals", std::move(intervals)},
          {"q_cardinality", nat_to_json(doc.q_cardinality)},
          {"all_members_from", nat_to_json(doc.all_members_from)}};
}

OutputDocument output_from_json(const nlohmann::json& j) {
  for (const char* key :
       {"n", "method", "q_intervals", "q_cardinality", "all_members_from"})
    if (!j.contains(key))
      throw std::invalid_argument(std::string("missing field '") + key + "'");

  OutputDocument doc;
  doc.n = nat_from_json(j.at("n"));
  doc.method = j.at("method").get<std::string>();
  Nat total = 0;
  for (const auto& pair : j.at("q_intervals")) {
    if (!pair.is_array() || pair.size() != 2)
      throw std::invalid_argument("q_intervals entries must be [lo, hi]");
    const Interval iv{nat_from_json(pair[0]), nat_from_json(pair[1])};
    if (iv.lo < Nat(1) || iv.lo > iv.hi)
      throw std::invalid_argument("malformed interval in q_intervals");
    doc.q_intervals.push_back(iv);
    total += iv.hi - iv.lo + Nat(1);
  }
  doc.q_cardinality = nat_from_json(j.at("q_cardinality"));
  doc.all_members_from = nat_from_json(j.at("all_members_from"));
  if (total != doc.q_cardinality)
    throw std::invalid_argument("q_cardinality does not match q_intervals");
  return doc;
}

std::string format_list(const IntervalSet& q) {
  require_dumpable(q);
  std::string out;
  q.for_each_element([&](Nat x) {
    if (!out.empty()) out.push_back(' ');
    out += to_string(x);
  });
  return out;
}

std::string format_intervals(const IntervalSet& q) {
  std::string out;
  for (const Interval& iv : q.intervals()) {
    if (!out.empty()) out += ", ";
    out += to_string(iv.lo);
    if (iv.lo != iv.hi) out += ".." + to_string(iv.hi);
  }
  return out;
}

std::string format_bfile(const IntervalSet& q) {
  require_dumpable(q);
  std::string out;
  std::uint64_t index = 0;
  q.for_each_element([&](Nat x) {
    out += std::to_string(++index);
    out.push_back(' ');
    out += to_string(x);
    out.push_back('\n');
  });
  return out;
}

}  // namespace selfsum
