#include "conradlab/numeric.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace conradlab {

Int pow_int(Int base, int64_t e) {
  if (e < 0) throw UsageError("pow_int: negative exponent");
  Int result = 1;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

Rat pow_rat(const Rat& base, int64_t e) {
  if (base == 0) {
    if (e <= 0) throw UsageError("pow_rat: zero base with non-positive exponent");
    return Rat(0);
  }
  bool inv = e < 0;
  uint64_t k = inv ? static_cast<uint64_t>(-(e + 1)) + 1 : static_cast<uint64_t>(e);
  Int num = boost::multiprecision::numerator(base);
  Int den = boost::multiprecision::denominator(base);
  Int pn = 1, pd = 1, bn = num, bd = den;
  while (k > 0) {
    if (k & 1) {
      pn *= bn;
      pd *= bd;
    }
    bn *= bn;
    bd *= bd;
    k >>= 1;
  }
  return inv ? Rat(pd, pn) : Rat(pn, pd);
}

std::string rat_str(const Rat& x) {
  Int num = boost::multiprecision::numerator(x);
  Int den = boost::multiprecision::denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rat parse_rat(std::string_view s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos) return Rat(Int(std::string(s)));
    Int num{std::string(s.substr(0, slash))};
    Int den{std::string(s.substr(slash + 1))};
    if (den == 0) throw UsageError("parse_rat: zero denominator");
    return Rat(num, den);
  } catch (const std::runtime_error& e) {
    throw UsageError("parse_rat: bad rational '" + std::string(s) + "'");
  }
}

int64_t checked_add_i64(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("i64 add");
  return r;
}

int64_t checked_neg_i64(int64_t a) {
  if (a == INT64_MIN) throw OverflowError("i64 neg");
  return -a;
}

}  // namespace conradlab
