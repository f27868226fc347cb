#pragma once

#include <string>

#include "selfsum/interval_set.hpp"
#include "selfsum/nat.hpp"

namespace selfsum {

enum class ComputeMethod { ClosedForm, IterativeSieve };

inline std::string method_name(ComputeMethod m) {
  return m == ComputeMethod::ClosedForm ? "closed-form" : "iterative-sieve";
}

// Final answer for one n: the finite complement q of the member set,
// and the first point from which every natural is a member.
struct MaximalSetResult {
  Nat n;
  IntervalSet q;
  Nat all_members_from;
  ComputeMethod method;

  friend bool operator==(const MaximalSetResult&,
                         const MaximalSetResult&) = default;
};

}  // namespace selfsum
