#pragma once

#include <optional>

#include "conradlab/quadratic.hpp"

namespace conradlab {

/// Orientation-preserving affine map x -> scale * x + offset, scale > 0
/// rational, offset in a quadratic field.
struct AffineMap {
  Rat scale{1};
  QuadraticNumber offset;

  QuadraticNumber apply(const QuadraticNumber& x) const {
    return QuadraticNumber(scale) * x + offset;
  }
  /// this after inner: x -> this(inner(x))
  AffineMap after(const AffineMap& inner) const {
    return {scale * inner.scale, QuadraticNumber(scale) * inner.offset + offset};
  }
  AffineMap inverse() const {
    Rat s = 1 / scale;
    return {s, -(QuadraticNumber(s) * offset)};
  }
  AffineMap power(int64_t e) const;
  bool is_identity() const { return scale == 1 && offset.is_zero(); }
  bool is_translation() const { return scale == 1; }
  /// Unique fixed point; empty for translations.
  std::optional<QuadraticNumber> fixed_point() const {
    if (scale == 1) return std::nullopt;
    return offset / QuadraticNumber(1 - scale);
  }

  friend bool operator==(const AffineMap& a, const AffineMap& b) {
    return a.scale == b.scale && a.offset == b.offset;
  }
};

/// True iff h^n(x) < y for every n >= 1, decided exactly from the monotone
/// orbit structure (translations by sign; otherwise by the fixed point).
bool forall_iterates_below(const AffineMap& h, const QuadraticNumber& x,
                           const QuadraticNumber& y);
/// True iff h^n(x) > y for every n >= 1.
bool forall_iterates_above(const AffineMap& h, const QuadraticNumber& x,
                           const QuadraticNumber& y);

/// Minimal n >= 1 with h^n(x) < y (resp. > y); empty when no iterate ever
/// does. Iterates exactly; iter_cap guards runaway translations.
std::optional<uint64_t> first_iterate_below(const AffineMap& h, const QuadraticNumber& x,
                                            const QuadraticNumber& y,
                                            uint64_t iter_cap = 1000000);
std::optional<uint64_t> first_iterate_above(const AffineMap& h, const QuadraticNumber& x,
                                            const QuadraticNumber& y,
                                            uint64_t iter_cap = 1000000);

}  // namespace conradlab
