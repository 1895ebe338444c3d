#pragma once

#include <cstdint>
#include <string>

#include "conradlab/numeric.hpp"

namespace conradlab {

/// Exact element p + q*sqrt(d) of a real quadratic field, with decidable sign.
///
/// Canonical form: q == 0 implies d == 0, and q != 0 implies d >= 2 and
/// square-free (square factors of d are extracted into q at construction).
/// Two values interoperate when they lie in the same field, i.e. they share d
/// or at least one of them is rational.
class QuadraticNumber {
 public:
  QuadraticNumber() = default;                     // zero
  QuadraticNumber(Rat p);                          // NOLINT: rational embeds
  QuadraticNumber(Int p) : QuadraticNumber(Rat(std::move(p))) {}   // NOLINT
  QuadraticNumber(long long p) : QuadraticNumber(Rat(p)) {}        // NOLINT
  QuadraticNumber(Rat p, Rat q, int64_t d);

  static QuadraticNumber sqrt_of(int64_t d) { return {Rat(0), Rat(1), d}; }

  const Rat& rational_part() const { return p_; }
  const Rat& radical_part() const { return q_; }
  int64_t radicand() const { return d_; }

  bool is_rational() const { return q_ == 0; }
  bool is_zero() const { return p_ == 0 && q_ == 0; }
  Rat as_rational() const;  // UsageError if irrational

  /// Exact sign by case analysis on the signs of p, q and comparison of
  /// p^2 against q^2 d.
  int sign() const;

  Int floor() const;

  QuadraticNumber operator-() const;
  QuadraticNumber& operator+=(const QuadraticNumber& o);
  QuadraticNumber& operator-=(const QuadraticNumber& o);
  QuadraticNumber& operator*=(const QuadraticNumber& o);
  QuadraticNumber& operator/=(const QuadraticNumber& o);
  friend QuadraticNumber operator+(QuadraticNumber a, const QuadraticNumber& b) { return a += b; }
  friend QuadraticNumber operator-(QuadraticNumber a, const QuadraticNumber& b) { return a -= b; }
  friend QuadraticNumber operator*(QuadraticNumber a, const QuadraticNumber& b) { return a *= b; }
  friend QuadraticNumber operator/(QuadraticNumber a, const QuadraticNumber& b) { return a /= b; }

  friend bool operator==(const QuadraticNumber& a, const QuadraticNumber& b);
  friend bool operator<(const QuadraticNumber& a, const QuadraticNumber& b) { return (a - b).sign() < 0; }
  friend bool operator>(const QuadraticNumber& a, const QuadraticNumber& b) { return (a - b).sign() > 0; }
  friend bool operator<=(const QuadraticNumber& a, const QuadraticNumber& b) { return (a - b).sign() <= 0; }
  friend bool operator>=(const QuadraticNumber& a, const QuadraticNumber& b) { return (a - b).sign() >= 0; }

  std::string str() const;  // e.g. "1+2*sqrt(2)", "-3/4"

 private:
  // Requires: compatible fields. Returns the common radicand.
  static int64_t common_radicand(const QuadraticNumber& a, const QuadraticNumber& b);
  void normalize();

  Rat p_{0};
  Rat q_{0};
  int64_t d_ = 0;
};

inline int sgn(const QuadraticNumber& x) { return x.sign(); }

}  // namespace conradlab
