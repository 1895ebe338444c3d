#include "conradlab/affine.hpp"

namespace conradlab {

AffineMap AffineMap::power(int64_t e) const {
  AffineMap base = e < 0 ? inverse() : *this;
  uint64_t k = e < 0 ? static_cast<uint64_t>(-(e + 1)) + 1 : static_cast<uint64_t>(e);
  AffineMap acc{Rat(1), QuadraticNumber()};
  while (k > 0) {
    if (k & 1) acc = acc.after(base);
    base = base.after(base);
    k >>= 1;
  }
  return acc;
}

bool forall_iterates_below(const AffineMap& h, const QuadraticNumber& x,
                           const QuadraticNumber& y) {
  if (h.is_translation()) {
    int ts = h.offset.sign();
    if (ts > 0) return false;        // unbounded upward
    if (ts == 0) return x < y;       // constant orbit
    return h.apply(x) < y;           // decreasing, first iterate is largest
  }
  QuadraticNumber p = *h.fixed_point();
  if (x == p) return x < y;
  if (h.scale < 1) {
    if (x > p) return h.apply(x) < y;  // decreasing toward p
    return p <= y;                     // increasing toward p, never reaching it
  }
  if (x > p) return false;             // expanding upward
  return h.apply(x) < y;               // expanding downward, first iterate largest
}

bool forall_iterates_above(const AffineMap& h, const QuadraticNumber& x,
                           const QuadraticNumber& y) {
  if (h.is_translation()) {
    int ts = h.offset.sign();
    if (ts < 0) return false;
    if (ts == 0) return x > y;
    return h.apply(x) > y;
  }
  QuadraticNumber p = *h.fixed_point();
  if (x == p) return x > y;
  if (h.scale < 1) {
    if (x < p) return h.apply(x) > y;
    return p >= y;
  }
  if (x < p) return false;
  return h.apply(x) > y;
}

namespace {

bool exists_iterate_below(const AffineMap& h, const QuadraticNumber& x,
                          const QuadraticNumber& y) {
  if (h.is_translation()) {
    if (h.offset.sign() < 0) return true;
    return h.apply(x) < y;  // nondecreasing orbit, first iterate is smallest
  }
  QuadraticNumber p = *h.fixed_point();
  if (x == p) return p < y;
  if (h.scale < 1) {
    if (x > p) return p < y;  // decreasing, approaches p arbitrarily closely
    return h.apply(x) < y;    // increasing, first iterate is smallest
  }
  if (x < p) return true;     // expanding downward
  return h.apply(x) < y;
}

bool exists_iterate_above(const AffineMap& h, const QuadraticNumber& x,
                          const QuadraticNumber& y) {
  if (h.is_translation()) {
    if (h.offset.sign() > 0) return true;
    return h.apply(x) > y;
  }
  QuadraticNumber p = *h.fixed_point();
  if (x == p) return p > y;
  if (h.scale < 1) {
    if (x < p) return p > y;
    return h.apply(x) > y;
  }
  if (x > p) return true;
  return h.apply(x) > y;
}

}  // namespace

std::optional<uint64_t> first_iterate_below(const AffineMap& h, const QuadraticNumber& x,
                                            const QuadraticNumber& y, uint64_t iter_cap) {
  if (!exists_iterate_below(h, x, y)) return std::nullopt;
  QuadraticNumber cur = x;
  for (uint64_t n = 1; n <= iter_cap; ++n) {
    cur = h.apply(cur);
    if (cur < y) return n;
  }
  throw ResourceCapError("first_iterate_below: iteration cap exceeded");
}

std::optional<uint64_t> first_iterate_above(const AffineMap& h, const QuadraticNumber& x,
                                            const QuadraticNumber& y, uint64_t iter_cap) {
  if (!exists_iterate_above(h, x, y)) return std::nullopt;
  QuadraticNumber cur = x;
  for (uint64_t n = 1; n <= iter_cap; ++n) {
    cur = h.apply(cur);
    if (cur > y) return n;
  }
  throw ResourceCapError("first_iterate_above: iteration cap exceeded");
}

}  // namespace conradlab
