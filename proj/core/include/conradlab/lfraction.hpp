#pragma once

#include <cstdint>
#include <string>

#include "conradlab/numeric.hpp"

namespace conradlab {

/// Exact element num / base^k of Z[1/base], base >= 2.
/// Normalized: k == 0, or base does not divide num; num == 0 forces k == 0.
template <class I>
struct LFractionT {
  I num{};
  int64_t k = 0;
  int32_t base = 2;

  bool is_zero() const { return num == I(0); }
  bool is_integer() const { return k == 0; }

  friend bool operator==(const LFractionT& a, const LFractionT& b) {
    return a.base == b.base && a.k == b.k && a.num == b.num;
  }
};

template <class I>
void lf_normalize(LFractionT<I>& f) {
  if (f.num == I(0)) {
    f.k = 0;
    return;
  }
  const I b{f.base};
  while (f.k > 0 && f.num % b == I(0)) {
    f.num = f.num / b;
    --f.k;
  }
}

template <class I>
LFractionT<I> make_lfraction(I num, int64_t k, int32_t base) {
  if (base < 2) throw UsageError("lfraction: base must be >= 2");
  if (k < 0) throw UsageError("lfraction: negative denominator exponent");
  LFractionT<I> f{std::move(num), k, base};
  lf_normalize(f);
  return f;
}

template <class I>
I lf_pow_base(int32_t base, int64_t e) {
  I r{1};
  const I b{base};
  for (int64_t i = 0; i < e; ++i) r = r * b;
  return r;
}

template <class I>
LFractionT<I> lf_add(const LFractionT<I>& a, const LFractionT<I>& b) {
  if (a.base != b.base) throw UsageError("lfraction: base mismatch");
  int64_t k = a.k > b.k ? a.k : b.k;
  I num = a.num * lf_pow_base<I>(a.base, k - a.k) + b.num * lf_pow_base<I>(b.base, k - b.k);
  LFractionT<I> f{std::move(num), k, a.base};
  lf_normalize(f);
  return f;
}

template <class I>
LFractionT<I> lf_neg(const LFractionT<I>& a) {
  LFractionT<I> f = a;
  f.num = -f.num;
  return f;
}

/// Multiplies by base^e, e of either sign.
template <class I>
LFractionT<I> lf_scale_pow(const LFractionT<I>& a, int64_t e) {
  if (a.num == I(0)) return a;
  LFractionT<I> f = a;
  if (e >= 0) {
    if (e <= f.k) {
      f.k -= e;
    } else {
      f.num = f.num * lf_pow_base<I>(f.base, e - f.k);
      f.k = 0;
    }
  } else {
    f.k = checked_add_i64(f.k, -e);
    lf_normalize(f);
  }
  return f;
}

// Numerator parity is representation-independent when base is odd.
template <class I>
bool lf_num_odd(const LFractionT<I>& a) {
  return is_odd(a.num);
}

inline Rat lf_value(const LFractionT<Int>& a) {
  return Rat(a.num, pow_int(Int(a.base), a.k));
}

std::string lf_str(const LFractionT<Int>& a);

using LFraction = LFractionT<Int>;

}  // namespace conradlab
