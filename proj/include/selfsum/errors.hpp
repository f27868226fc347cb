#pragma once

#include <stdexcept>
#include <string>

namespace selfsum {

// Arithmetic left the representable range (wrap-around is never allowed).
class OverflowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInterval : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Fewer than k distinct elements available in the source interval.
class NotEnoughElements : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Problem parameter n out of range (n >= 2 required).
class BadN : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Certificate verification failed; caller must fall back to the sieve.
class CertificateFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The sieve would have to decide values beyond its configured cap.
class OracleCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Element-by-element output refused; the set is too large to dump.
class ElementDumpTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace selfsum
