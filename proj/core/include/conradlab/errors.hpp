#pragma once

#include <stdexcept>
#include <string>

namespace conradlab {

/// Bad input: family mismatch, malformed descriptor, parse failure.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configurable limit (ball element cap, iteration cap) was exceeded.
class ResourceCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Violated internal expectation, e.g. a certificate built from a witness
/// that does not match its ordering.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised by the checked 64-bit fast path; callers fall back to big integers.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

}  // namespace conradlab
