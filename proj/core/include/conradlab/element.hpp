#pragma once

#include <boost/container/small_vector.hpp>
#include <cstdint>
#include <string>
#include <variant>

#include "conradlab/family.hpp"
#include "conradlab/lfraction.hpp"
#include "conradlab/numeric.hpp"

namespace conradlab {

template <class I>
using CoordVec = boost::container::small_vector<I, 6>;

/// B(1,ell) in normal form (r, n): the affine map x -> ell^n x + r.
/// (r,n)(r',n') = (r + ell^n r', n + n').
template <class I>
struct BsElemT {
  LFractionT<I> r;
  int64_t n = 0;

  friend bool operator==(const BsElemT& a, const BsElemT& b) = default;
};

/// T_n as Z^n with the twisted product; coordinates stored (b_n, ..., b_1),
/// index 0 outermost.
template <class I>
struct TarElemT {
  CoordVec<I> b;

  friend bool operator==(const TarElemT& a, const TarElemT& b) = default;
};

/// C_n as Z x Z[1/3] x Z^n; a-coordinates stored (a_n, ..., a_1).
template <class I>
struct CnElemT {
  int64_t c = 0;
  LFractionT<I> d{I(0), 0, 3};
  CoordVec<I> a;

  friend bool operator==(const CnElemT& a, const CnElemT& b) = default;
};

/// Z^n, componentwise; coordinates stored (v_1, ..., v_n).
template <class I>
struct ZnElemT {
  CoordVec<I> v;

  friend bool operator==(const ZnElemT& a, const ZnElemT& b) = default;
};

// ---------------------------------------------------------------------------
// Group laws, shared by every integer backend.

template <class I>
BsElemT<I> bs_mul(const BsElemT<I>& x, const BsElemT<I>& y) {
  return {lf_add(x.r, lf_scale_pow(y.r, x.n)), checked_add_i64(x.n, y.n)};
}

template <class I>
BsElemT<I> bs_inv(const BsElemT<I>& x) {
  return {lf_scale_pow(lf_neg(x.r), -x.n), checked_neg_i64(x.n)};
}

template <class I>
TarElemT<I> tar_mul(const TarElemT<I>& x, const TarElemT<I>& y) {
  const size_t n = x.b.size();
  TarElemT<I> out;
  out.b.resize(n);
  // top coordinate adds; below, the left factor is twisted by the right
  // factor's coordinate one level up
  out.b[0] = x.b[0] + y.b[0];
  for (size_t j = 1; j < n; ++j) {
    if (is_odd(y.b[j - 1]))
      out.b[j] = y.b[j] - x.b[j];
    else
      out.b[j] = x.b[j] + y.b[j];
  }
  return out;
}

template <class I>
TarElemT<I> tar_inv(const TarElemT<I>& x) {
  const size_t n = x.b.size();
  TarElemT<I> out;
  out.b.resize(n);
  out.b[0] = -x.b[0];
  for (size_t j = 1; j < n; ++j) {
    if (is_odd(out.b[j - 1]))
      out.b[j] = x.b[j];
    else
      out.b[j] = -x.b[j];
  }
  return out;
}

template <class I>
CnElemT<I> cn_mul(const CnElemT<I>& x, const CnElemT<I>& y) {
  const size_t n = x.a.size();
  CnElemT<I> out;
  out.c = checked_add_i64(x.c, y.c);
  out.d = lf_add(x.d, lf_scale_pow(y.d, x.c));
  out.a.resize(n);
  // the right factor is twisted by the left factor's coordinate one level up
  // (d-numerator parity above a_n; parity is base-3 representation invariant)
  if (lf_num_odd(x.d))
    out.a[0] = x.a[0] - y.a[0];
  else
    out.a[0] = x.a[0] + y.a[0];
  for (size_t j = 1; j < n; ++j) {
    if (is_odd(x.a[j - 1]))
      out.a[j] = x.a[j] - y.a[j];
    else
      out.a[j] = x.a[j] + y.a[j];
  }
  return out;
}

template <class I>
CnElemT<I> cn_inv(const CnElemT<I>& x) {
  const size_t n = x.a.size();
  CnElemT<I> out;
  out.c = checked_neg_i64(x.c);
  out.d = lf_scale_pow(lf_neg(x.d), -x.c);
  out.a.resize(n);
  if (lf_num_odd(x.d))
    out.a[0] = x.a[0];
  else
    out.a[0] = -x.a[0];
  for (size_t j = 1; j < n; ++j) {
    if (is_odd(x.a[j - 1]))
      out.a[j] = x.a[j];
    else
      out.a[j] = -x.a[j];
  }
  return out;
}

template <class I>
ZnElemT<I> zn_mul(const ZnElemT<I>& x, const ZnElemT<I>& y) {
  ZnElemT<I> out;
  out.v.resize(x.v.size());
  for (size_t j = 0; j < x.v.size(); ++j) out.v[j] = x.v[j] + y.v[j];
  return out;
}

template <class I>
ZnElemT<I> zn_inv(const ZnElemT<I>& x) {
  ZnElemT<I> out;
  out.v.resize(x.v.size());
  for (size_t j = 0; j < x.v.size(); ++j) out.v[j] = -x.v[j];
  return out;
}

// ---------------------------------------------------------------------------
// Canonical convex-series level structure. level_of returns 0 for the
// identity, otherwise the least i with g in G_i; series_top_sign gives the
// sign of the coordinate at that level.

template <class I>
int bs_level(const BsElemT<I>& x) {
  if (x.n != 0) return 2;
  return x.r.is_zero() ? 0 : 1;
}

template <class I>
int bs_top_sign(const BsElemT<I>& x) {
  if (x.n != 0) return sgn(x.n);
  return sgn(x.r.num);
}

template <class I>
int tar_level(const TarElemT<I>& x) {
  const int n = static_cast<int>(x.b.size());
  for (int j = 0; j < n; ++j)
    if (!(x.b[j] == I(0))) return n - j;
  return 0;
}

template <class I>
int tar_top_sign(const TarElemT<I>& x) {
  for (const auto& c : x.b)
    if (!(c == I(0))) return sgn(c);
  return 0;
}

template <class I>
int cn_level(const CnElemT<I>& x) {
  const int n = static_cast<int>(x.a.size());
  if (x.c != 0) return n + 2;
  if (!x.d.is_zero()) return n + 1;
  for (int j = 0; j < n; ++j)
    if (!(x.a[j] == I(0))) return n - j;
  return 0;
}

template <class I>
int cn_top_sign(const CnElemT<I>& x) {
  if (x.c != 0) return sgn(x.c);
  if (!x.d.is_zero()) return sgn(x.d.num);
  for (const auto& c : x.a)
    if (!(c == I(0))) return sgn(c);
  return 0;
}

template <class I>
int zn_level(const ZnElemT<I>& x) {
  for (int j = static_cast<int>(x.v.size()) - 1; j >= 0; --j)
    if (!(x.v[j] == I(0))) return j + 1;
  return 0;
}

template <class I>
int zn_top_sign(const ZnElemT<I>& x) {
  for (int j = static_cast<int>(x.v.size()) - 1; j >= 0; --j)
    if (!(x.v[j] == I(0))) return sgn(x.v[j]);
  return 0;
}

// ---------------------------------------------------------------------------

/// Exact normal form of an element of one of the built-in families.
/// Immutable value type; all operations are pure.
class GroupElement {
 public:
  using Payload = std::variant<BsElemT<Int>, TarElemT<Int>, CnElemT<Int>, ZnElemT<Int>>;

  GroupElement(Family fam, Payload payload);

  const Family& family() const { return fam_; }
  const Payload& payload() const { return payload_; }
  bool is_identity() const;

  const BsElemT<Int>& as_bs() const;
  const TarElemT<Int>& as_tar() const;
  const CnElemT<Int>& as_cn() const;
  const ZnElemT<Int>& as_zn() const;

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.fam_ == b.fam_ && a.payload_ == b.payload_;
  }

 private:
  Family fam_;
  Payload payload_;
};

GroupElement identity(const Family& f);
GroupElement generator_power(const Family& f, const GenId& g, int64_t exp);
GroupElement multiply(const GroupElement& x, const GroupElement& y);
GroupElement invert(const GroupElement& x);
/// h x h^-1
GroupElement conjugate_element(const GroupElement& x, const GroupElement& h);
GroupElement element_power(const GroupElement& x, int64_t e);

/// Deterministic structural order; ties broken per family by coordinates.
/// Used wherever a scan order or a witness choice must be reproducible.
bool canonical_less(const GroupElement& a, const GroupElement& b);

struct CanonicalLess {
  bool operator()(const GroupElement& a, const GroupElement& b) const {
    return canonical_less(a, b);
  }
};

/// Level of g in the canonical convex series (0 for the identity).
int series_level_of(const GroupElement& g);
/// Sign of the leading series coordinate (0 only for the identity).
int series_top_sign(const GroupElement& g);
/// Quotient coordinate of g at the given series level (1-based), as an exact
/// rational. Zero when g sits below that level.
Rat series_level_coordinate(const GroupElement& g, int level);

std::string compact_str(const GroupElement& g);  // e.g. "BS(5/4,-3)", "T(1,0)"
GroupElement parse_compact(const Family& f, std::string_view s);

// Conversions for the 64-bit scan fast path. pack throws OverflowError when a
// coordinate does not fit.
BsElemT<SafeI64> pack_bs(const BsElemT<Int>& x);
TarElemT<SafeI64> pack_tar(const TarElemT<Int>& x);
CnElemT<SafeI64> pack_cn(const CnElemT<Int>& x);
ZnElemT<SafeI64> pack_zn(const ZnElemT<Int>& x);

}  // namespace conradlab
