#include <random>

#include "conradlab/lfraction.hpp"
#include "conradlab/numeric.hpp"
#include "conradlab/quadratic.hpp"
#include "doctest.h"

using namespace conradlab;

TEST_CASE("rational parse/format round trip") {
  CHECK(rat_str(parse_rat("3/4")) == "3/4");
  CHECK(rat_str(parse_rat("-6/8")) == "-3/4");
  CHECK(rat_str(parse_rat("5")) == "5");
  CHECK(parse_rat("22/7") == Rat(22, 7));
  CHECK_THROWS_AS(parse_rat("1/0"), UsageError);
  CHECK_THROWS_AS(parse_rat("x"), UsageError);
}

TEST_CASE("pow_rat handles negative exponents") {
  CHECK(pow_rat(Rat(2), 10) == Rat(1024));
  CHECK(pow_rat(Rat(2), -3) == Rat(1, 8));
  CHECK(pow_rat(Rat(3, 2), 0) == Rat(1));
  CHECK(pow_rat(Rat(2, 3), -2) == Rat(9, 4));
}

TEST_CASE("SafeI64 overflow raises") {
  SafeI64 big(INT64_MAX);
  CHECK_THROWS_AS(big + SafeI64(1), OverflowError);
  CHECK_THROWS_AS(big * SafeI64(2), OverflowError);
  CHECK_THROWS_AS(-SafeI64(INT64_MIN), OverflowError);
  CHECK((SafeI64(3) * SafeI64(4)).v == 12);
}

TEST_CASE("quadratic sign: all sign-pattern branches") {
  auto s2 = QuadraticNumber::sqrt_of(2);
  CHECK(s2.sign() == 1);
  CHECK((-s2).sign() == -1);
  CHECK(QuadraticNumber().sign() == 0);

  // mixed signs resolved by p^2 vs q^2 d, both directions
  QuadraticNumber a(Rat(3), Rat(-2), 2);   // 3 - 2*sqrt2 ~ 0.17
  CHECK(a.sign() == 1);
  QuadraticNumber b(Rat(2), Rat(-2), 2);   // 2 - 2*sqrt2 < 0
  CHECK(b.sign() == -1);
  QuadraticNumber c(Rat(-3), Rat(2), 2);   // -3 + 2*sqrt2 < 0
  CHECK(c.sign() == -1);
  QuadraticNumber d(Rat(-2), Rat(2), 2);   // -2 + 2*sqrt2 > 0
  CHECK(d.sign() == 1);
}

TEST_CASE("quadratic arithmetic is closed and exact") {
  auto s2 = QuadraticNumber::sqrt_of(2);
  CHECK(s2 * s2 == QuadraticNumber(Rat(2)));
  auto x = QuadraticNumber(Rat(1)) + s2;          // 1 + sqrt2
  auto conj = QuadraticNumber(Rat(1)) - s2;       // 1 - sqrt2
  CHECK(x * conj == QuadraticNumber(Rat(-1)));
  CHECK((x / x) == QuadraticNumber(Rat(1)));
  // (1+sqrt2)^-1 = sqrt2 - 1
  CHECK(QuadraticNumber(Rat(1)) / x == s2 - QuadraticNumber(Rat(1)));
}

TEST_CASE("quadratic radicand normalization extracts square parts") {
  QuadraticNumber x(Rat(0), Rat(1), 8);  // sqrt8 = 2 sqrt2
  CHECK(x.radicand() == 2);
  CHECK(x.radical_part() == Rat(2));
  QuadraticNumber y(Rat(1), Rat(3), 1);  // sqrt1 folds into the rational part
  CHECK(y.is_rational());
  CHECK(y.as_rational() == Rat(4));
  QuadraticNumber z(Rat(1), Rat(0), 7);  // zero radical part drops d
  CHECK(z.radicand() == 0);
}

TEST_CASE("quadratic rejects mixed fields") {
  auto s2 = QuadraticNumber::sqrt_of(2);
  auto s3 = QuadraticNumber::sqrt_of(3);
  CHECK_THROWS_AS(s2 + s3, UsageError);
  CHECK_NOTHROW(s2 + QuadraticNumber(Rat(5, 3)));
}

TEST_CASE("quadratic floor") {
  auto s2 = QuadraticNumber::sqrt_of(2);
  CHECK(s2.floor() == 1);
  CHECK((-s2).floor() == -2);
  CHECK((QuadraticNumber(Rat(10)) * s2).floor() == 14);  // 14.142...
  CHECK(QuadraticNumber(Rat(-7, 2)).floor() == -4);
  CHECK(QuadraticNumber(Rat(6, 3)).floor() == 2);
}

TEST_CASE("quadratic comparisons agree with double approximation away from ties") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<int> den(1, 9);
  for (int i = 0; i < 500; ++i) {
    Rat p(num(rng), den(rng));
    Rat q(num(rng), den(rng));
    QuadraticNumber x(p, q, 2);
    double approx =
        static_cast<double>(p) + static_cast<double>(q) * 1.4142135623730951;
    if (std::abs(approx) > 1e-9) CHECK(x.sign() == (approx > 0 ? 1 : -1));
  }
}

TEST_CASE("lfraction normalization and arithmetic") {
  auto f = make_lfraction(Int(12), 2, 2);  // 12/4 = 3
  CHECK(f.num == 3);
  CHECK(f.k == 0);
  auto g = make_lfraction(Int(5), 2, 2);  // 5/4
  CHECK(lf_value(g) == Rat(5, 4));
  auto s = lf_add(f, g);
  CHECK(lf_value(s) == Rat(17, 4));
  CHECK(lf_value(lf_scale_pow(g, 3)) == Rat(10));
  CHECK(lf_value(lf_scale_pow(g, -2)) == Rat(5, 16));
  CHECK_THROWS_AS(make_lfraction(Int(1), -1, 2), UsageError);
  CHECK_THROWS_AS(make_lfraction(Int(1), 0, 1), UsageError);
}

TEST_CASE("lfraction numerator parity is normalization-invariant for odd base") {
  // same value written two ways: m/3^k and 3m/3^(k+1)
  for (int m : {1, 2, 5, -7, 10, -44}) {
    auto a = make_lfraction(Int(m), 2, 3);
    auto b = make_lfraction(Int(3 * m), 3, 3);
    CHECK(a == b);
    CHECK(lf_num_odd(a) == (m % 2 != 0));
  }
}
