#include "conradlab/quadratic.hpp"

#include <utility>

namespace conradlab {

namespace {

// Splits d = s^2 * d0 with d0 square-free; returns (s, d0).
std::pair<int64_t, int64_t> extract_square_part(int64_t d) {
  int64_t s = 1;
  for (int64_t p = 2; p * p <= d; p == 2 ? p = 3 : p += 2) {
    while (d % (p * p) == 0) {
      d /= p * p;
      s *= p;
    }
  }
  return {s, d};
}

}  // namespace

QuadraticNumber::QuadraticNumber(Rat p) : p_(std::move(p)) {}

QuadraticNumber::QuadraticNumber(Rat p, Rat q, int64_t d)
    : p_(std::move(p)), q_(std::move(q)), d_(d) {
  if (d_ < 0) throw UsageError("quadratic: negative radicand");
  normalize();
}

void QuadraticNumber::normalize() {
  if (q_ == 0 || d_ == 0) {
    q_ = 0;
    d_ = 0;
    return;
  }
  if (d_ == 1) {
    p_ += q_;
    q_ = 0;
    d_ = 0;
    return;
  }
  auto [s, d0] = extract_square_part(d_);
  if (s != 1) {
    q_ *= s;
    d_ = d0;
    if (d_ == 1) {
      p_ += q_;
      q_ = 0;
      d_ = 0;
    }
  }
}

Rat QuadraticNumber::as_rational() const {
  if (!is_rational()) throw UsageError("quadratic: irrational value used as rational");
  return p_;
}

int QuadraticNumber::sign() const {
  if (q_ == 0) return sgn(p_);
  if (p_ == 0) return sgn(q_);
  int sp = sgn(p_), sq = sgn(q_);
  if (sp == sq) return sp;
  // Mixed signs: compare |p| against |q|*sqrt(d) via p^2 vs q^2 d.
  Rat p2 = p_ * p_;
  Rat q2d = q_ * q_ * Rat(d_);
  int cmp = sgn(p2 - q2d);  // cannot be 0: d square-free >= 2, q != 0
  if (cmp == 0) throw InternalError("quadratic: p^2 == q^2 d with square-free d");
  return cmp > 0 ? sp : sq;
}

Int QuadraticNumber::floor() const {
  if (is_rational()) {
    Int num = boost::multiprecision::numerator(p_);
    Int den = boost::multiprecision::denominator(p_);
    Int quot = num / den;
    if (num < 0 && quot * den != num) --quot;
    return quot;
  }
  // |x| <= |p| + |q| (d+1), so an exact doubling + bisection search over
  // integers terminates; all comparisons are exact.
  Int lo = -1, hi = 1;
  while (!(QuadraticNumber(Rat(lo)) <= *this)) lo *= 2;
  while (!(*this < QuadraticNumber(Rat(hi)))) hi *= 2;
  while (hi - lo > 1) {
    Int mid = (lo + hi) / 2;
    if (QuadraticNumber(Rat(mid)) <= *this)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

int64_t QuadraticNumber::common_radicand(const QuadraticNumber& a, const QuadraticNumber& b) {
  if (a.d_ == 0) return b.d_;
  if (b.d_ == 0 || a.d_ == b.d_) return a.d_;
  throw UsageError("quadratic: incompatible fields sqrt(" + std::to_string(a.d_) + ") vs sqrt(" +
                   std::to_string(b.d_) + ")");
}

QuadraticNumber QuadraticNumber::operator-() const {
  QuadraticNumber r = *this;
  r.p_ = -r.p_;
  r.q_ = -r.q_;
  return r;
}

QuadraticNumber& QuadraticNumber::operator+=(const QuadraticNumber& o) {
  d_ = common_radicand(*this, o);
  p_ += o.p_;
  q_ += o.q_;
  if (q_ == 0) d_ = 0;
  return *this;
}

QuadraticNumber& QuadraticNumber::operator-=(const QuadraticNumber& o) {
  d_ = common_radicand(*this, o);
  p_ -= o.p_;
  q_ -= o.q_;
  if (q_ == 0) d_ = 0;
  return *this;
}

QuadraticNumber& QuadraticNumber::operator*=(const QuadraticNumber& o) {
  int64_t d = common_radicand(*this, o);
  Rat p = p_ * o.p_ + q_ * o.q_ * Rat(d);
  Rat q = p_ * o.q_ + q_ * o.p_;
  p_ = std::move(p);
  q_ = std::move(q);
  d_ = q_ == 0 ? 0 : d;
  return *this;
}

QuadraticNumber& QuadraticNumber::operator/=(const QuadraticNumber& o) {
  if (o.is_zero()) throw UsageError("quadratic: division by zero");
  int64_t d = common_radicand(*this, o);
  // 1/(p + q sqrt d) = (p - q sqrt d) / (p^2 - q^2 d)
  Rat den = o.p_ * o.p_ - o.q_ * o.q_ * Rat(o.d_);
  QuadraticNumber conj(o.p_ / den, -o.q_ / den, d);
  return *this *= conj;
}

bool operator==(const QuadraticNumber& a, const QuadraticNumber& b) {
  return a.p_ == b.p_ && a.q_ == b.q_ && a.d_ == b.d_;
}

std::string QuadraticNumber::str() const {
  if (q_ == 0) return rat_str(p_);
  std::string radical;
  if (q_ == 1)
    radical = "sqrt(" + std::to_string(d_) + ")";
  else if (q_ == -1)
    radical = "-sqrt(" + std::to_string(d_) + ")";
  else
    radical = rat_str(q_) + "*sqrt(" + std::to_string(d_) + ")";
  if (p_ == 0) return radical;
  if (q_ > 0) return rat_str(p_) + "+" + radical;
  return rat_str(p_) + radical;
}

}  // namespace conradlab
