#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "conradlab/errors.hpp"

namespace conradlab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline int sgn(const Int& x) { return x.sign(); }
inline int sgn(const Rat& x) { return x.sign(); }
inline int sgn(int64_t x) { return x < 0 ? -1 : x > 0 ? 1 : 0; }

inline bool is_odd(const Int& x) { return (x % 2) != 0; }

Int pow_int(Int base, int64_t e);           // e >= 0
Rat pow_rat(const Rat& base, int64_t e);    // base != 0, e any sign

std::string rat_str(const Rat& x);          // "-3/4", "5"
Rat parse_rat(std::string_view s);

/// 64-bit integer with overflow-checked arithmetic. Used as the drop-in
/// integer type for exhaustive-scan fast paths; any overflow throws and the
/// caller reruns the scan with arbitrary-precision integers.
struct SafeI64 {
  int64_t v = 0;

  SafeI64() = default;
  SafeI64(int64_t x) : v(x) {}  // NOLINT: implicit by design

  friend SafeI64 operator+(SafeI64 a, SafeI64 b) {
    SafeI64 r;
    if (__builtin_add_overflow(a.v, b.v, &r.v)) throw OverflowError("i64 add");
    return r;
  }
  friend SafeI64 operator-(SafeI64 a, SafeI64 b) {
    SafeI64 r;
    if (__builtin_sub_overflow(a.v, b.v, &r.v)) throw OverflowError("i64 sub");
    return r;
  }
  friend SafeI64 operator*(SafeI64 a, SafeI64 b) {
    SafeI64 r;
    if (__builtin_mul_overflow(a.v, b.v, &r.v)) throw OverflowError("i64 mul");
    return r;
  }
  SafeI64 operator-() const {
    if (v == INT64_MIN) throw OverflowError("i64 neg");
    return SafeI64(-v);
  }
  SafeI64& operator+=(SafeI64 b) { return *this = *this + b; }
  SafeI64& operator-=(SafeI64 b) { return *this = *this - b; }
  SafeI64& operator*=(SafeI64 b) { return *this = *this * b; }
  friend SafeI64 operator/(SafeI64 a, SafeI64 b) { return SafeI64(a.v / b.v); }
  friend SafeI64 operator%(SafeI64 a, SafeI64 b) { return SafeI64(a.v % b.v); }
  friend bool operator==(SafeI64 a, SafeI64 b) { return a.v == b.v; }
  friend auto operator<=>(SafeI64 a, SafeI64 b) { return a.v <=> b.v; }
};

inline int sgn(SafeI64 x) { return sgn(x.v); }
inline bool is_odd(SafeI64 x) { return (x.v % 2) != 0; }

int64_t checked_add_i64(int64_t a, int64_t b);
int64_t checked_neg_i64(int64_t a);

}  // namespace conradlab
