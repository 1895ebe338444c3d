#include <random>

#include "conradlab/ball.hpp"
#include "conradlab/ordering.hpp"
#include "conradlab/word.hpp"
#include "doctest.h"

using namespace conradlab;

namespace {

const Family kBs2 = bs_family(2);

GroupElement bs(const Rat& r, int64_t n) {
  Int num = boost::multiprecision::numerator(r);
  Int den = boost::multiprecision::denominator(r);
  int64_t k = 0;
  while (den > 1) {
    den /= 2;
    ++k;
  }
  return {kBs2, BsElemT<Int>{make_lfraction(num, k, 2), n}};
}

OrderingDescriptor sqrt2_order() { return make_smirnov(2, QuadraticNumber::sqrt_of(2)); }

}  // namespace

TEST_CASE("Smirnov signs at sqrt2") {
  auto ord = sqrt2_order();
  auto a = generator_power(kBs2, {'a', 0}, 1);
  auto b = generator_power(kBs2, {'b', 0}, 1);
  CHECK(sign_of(ord, a) == Sign::Positive);   // displacement 1
  CHECK(sign_of(ord, b) == Sign::Positive);   // displacement sqrt2
  CHECK(sign_of(ord, identity(kBs2)) == Sign::Zero);
  CHECK(sign_of(ord, invert(a)) == Sign::Negative);
}

TEST_CASE("one-sided completions at a rational basepoint") {
  auto plus = make_smirnov(2, QuadraticNumber(Rat(1)), SmirnovOrder::Side::PlusLimit);
  auto minus = make_smirnov(2, QuadraticNumber(Rat(1)), SmirnovOrder::Side::MinusLimit);
  auto g = bs(Rat(-1), 1);  // displacement (2-1)*1 - 1 = 0, n = 1
  CHECK(sign_of(plus, g) == Sign::Positive);
  CHECK(sign_of(minus, g) == Sign::Negative);
  CHECK(sign_of(plus, identity(kBs2)) == Sign::Zero);
  // rational basepoint with Exact side is rejected at construction
  CHECK_THROWS_AS(make_smirnov(2, QuadraticNumber(Rat(1))), UsageError);
}

TEST_CASE("limit semantics: one-sided signs match nearby basepoints") {
  auto plus = make_smirnov(2, QuadraticNumber(Rat(1)), SmirnovOrder::Side::PlusLimit);
  Ball ball = generate_ball(kBs2, 6);
  // smallest gap to the next sign threshold above 1 on this ball
  Rat gap(1);
  for (const auto& g : ball.elements()) {
    const auto& e = g.as_bs();
    if (e.n == 0) continue;
    Rat t = -lf_value(e.r) / (pow_rat(Rat(2), e.n) - 1);
    if (t > 1 && t - 1 < gap) gap = t - 1;
  }
  Rat m(2);
  while (Rat(1) / m >= gap) m *= 2;
  CHECK(m <= Rat(Int(1) << 20));
  for (Rat mm : {m, Rat(m * 4)}) {
    auto nearby_plus =
        make_smirnov(2, QuadraticNumber(Rat(1) + 1 / mm), SmirnovOrder::Side::PlusLimit);
    auto nearby_minus =
        make_smirnov(2, QuadraticNumber(Rat(1) + 1 / mm), SmirnovOrder::Side::MinusLimit);
    for (const auto& g : ball.elements()) {
      CHECK(sign_of(plus, g) == sign_of(nearby_plus, g));
      // off the thresholds the side choice is irrelevant
      CHECK(sign_of(nearby_plus, g) == sign_of(nearby_minus, g));
    }
  }
}

TEST_CASE("compare is left-invariant and matches the worked cases") {
  auto ord = sqrt2_order();
  auto a = generator_power(kBs2, {'a', 0}, 1);
  auto g = bs(Rat(1), -1);
  CHECK(compare(ord, g, a) == Cmp::Less);
  CHECK(compare(ord, g, g) == Cmp::Equal);

  auto flips00 = make_flip(kBs2, "00");
  auto b = generator_power(kBs2, {'b', 0}, 1);
  CHECK(compare(flips00, a, b) == Cmp::Less);

  // a is infinitesimal next to b under every flip ordering: a^n vs b always
  // compares the way id vs b does
  for (auto bits : {"00", "01", "10", "11"}) {
    auto f = make_flip(kBs2, bits);
    Cmp expect = compare(f, identity(kBs2), b);
    for (int n = -6; n <= 6; ++n)
      CHECK(compare(f, element_power(a, n), b) == expect);
  }

  Ball ball = generate_ball(kBs2, 3);
  std::mt19937 rng(7);
  std::uniform_int_distribution<size_t> pick(0, ball.size() - 1);
  for (int i = 0; i < 200; ++i) {
    const auto &x = ball.at(pick(rng)), &y = ball.at(pick(rng)), &k = ball.at(pick(rng));
    CHECK(compare(ord, x, y) == compare(ord, multiply(k, x), multiply(k, y)));
  }
}

TEST_CASE("opposite involution and flip simplification") {
  auto ord = sqrt2_order();
  auto a = generator_power(kBs2, {'a', 0}, 1);
  CHECK(sign_of(opposite(ord), a) == Sign::Negative);

  Ball ball = generate_ball(kBs2, 6);
  auto opp2 = opposite(opposite(ord));
  for (const auto& g : ball.elements()) CHECK(sign_of(opp2, g) == sign_of(ord, g));

  auto flips00 = make_flip(kBs2, "00");
  auto opp = opposite(flips00);
  REQUIRE(opp.as_flip() != nullptr);
  CHECK(opp.as_flip()->bits() == "11");
  for (const auto& g : ball.elements())
    CHECK(sign_of(opp, g) == negate(sign_of(flips00, g)));
}

TEST_CASE("conjugation action sends the sqrt2 ordering to its halved basepoint") {
  auto ord = sqrt2_order();
  auto b = generator_power(kBs2, {'b', 0}, 1);
  auto conj = conjugate(ord, b);
  auto half = make_smirnov(2, QuadraticNumber(Rat(0), Rat(1, 2), 2));  // sqrt2 / 2
  Ball ball = generate_ball(kBs2, 6);
  for (const auto& g : ball.elements()) CHECK(sign_of(conj, g) == sign_of(half, g));
}

TEST_CASE("conjugation by the identity and functoriality") {
  auto ord = sqrt2_order();
  CHECK(conjugate(ord, identity(kBs2)).as_smirnov() != nullptr);

  Ball ball = generate_ball(kBs2, 4);
  auto g = eval_word(kBs2, parse_word(kBs2, "b a^-1"));
  auto h = eval_word(kBs2, parse_word(kBs2, "a b"));
  auto lhs = conjugate(ord, multiply(g, h));
  auto rhs = conjugate(conjugate(ord, g), h);
  for (const auto& x : ball.elements()) CHECK(sign_of(lhs, x) == sign_of(rhs, x));
}

TEST_CASE("flip orderings of B(1,2) are conjugation-invariant oracles") {
  auto flips00 = make_flip(kBs2, "00");
  auto b = generator_power(kBs2, {'b', 0}, 1);
  auto conj = conjugate(flips00, b);
  Ball ball = generate_ball(kBs2, 6);
  for (const auto& g : ball.elements()) CHECK(sign_of(conj, g) == sign_of(flips00, g));
}

TEST_CASE("slope orderings on Z^n") {
  auto s2 = QuadraticNumber::sqrt_of(2);
  auto irr = make_slope({s2, QuadraticNumber(Rat(1))});
  Family z2 = abelian_family(2);
  GroupElement v{z2, ZnElemT<Int>{{Int(1), Int(-1)}}};
  CHECK(sign_of(irr, v) == Sign::Positive);  // sqrt2 - 1 > 0

  // rational slope: ties resolved lexicographically under the permutation
  auto rational = make_slope({QuadraticNumber(Rat(1)), QuadraticNumber(Rat(1))});
  CHECK(sign_of(rational, v) == Sign::Positive);  // tie, v1 = 1 decides
  auto swapped = make_slope({QuadraticNumber(Rat(1)), QuadraticNumber(Rat(1))}, {1, 0});
  CHECK(sign_of(swapped, v) == Sign::Negative);  // tie, v2 = -1 decides

  CHECK_THROWS_AS(make_slope({QuadraticNumber(), QuadraticNumber()}), UsageError);
  CHECK_THROWS_AS(make_slope({s2}, {0, 1}), UsageError);

  // rank 1: any two positive directions give the same oracle
  Family z1 = abelian_family(1);
  Ball line = generate_ball(z1, 3);
  auto d1 = make_slope({QuadraticNumber(Rat(1))});
  auto d2 = make_slope({QuadraticNumber(Rat(7, 3))});
  for (const auto& g : line.elements()) CHECK(sign_of(d1, g) == sign_of(d2, g));
}

TEST_CASE("totality: Zero exactly at the identity") {
  std::vector<OrderingDescriptor> catalogue;
  catalogue.push_back(make_flip(kBs2, "01"));
  catalogue.push_back(sqrt2_order());
  catalogue.push_back(make_smirnov(2, QuadraticNumber(Rat(3)), SmirnovOrder::Side::MinusLimit));
  catalogue.push_back(make_flip(tararin_family(2), "10"));
  catalogue.push_back(make_flip(cn_family(2), "0110"));
  catalogue.push_back(make_slope({QuadraticNumber(Rat(2)), QuadraticNumber(Rat(-3))}));
  for (const auto& ord : catalogue) {
    Ball ball = generate_ball(ord.family(), 4);
    for (const auto& g : ball.elements())
      CHECK((sign_of(ord, g) == Sign::Zero) == g.is_identity());
  }
}

TEST_CASE("cone axioms hold for the sqrt2 ordering") {
  auto report = check_cone_axioms(sqrt2_order(), generate_ball(kBs2, 5));
  CHECK(report.pass);
}

TEST_CASE("cone axioms catch a planted fault") {
  auto ord = sqrt2_order();
  auto a = generator_power(kBs2, {'a', 0}, 1);
  SignOracle corrupted = [ord, a](const GroupElement& g) {
    Sign s = sign_of(ord, g);
    return g == a ? negate(s) : s;  // flipped at a but not at a^-1
  };
  auto report = check_cone_axioms(corrupted, generate_ball(kBs2, 3));
  CHECK(!report.pass);
  bool found = false;
  for (const auto& v : report.violations)
    found = found || (v.axiom == "inverse-sign" && (v.g == a || v.g == invert(a)));
  CHECK(found);
}

TEST_CASE("descriptor family mismatch raises") {
  auto ord = sqrt2_order();
  CHECK_THROWS_AS(sign_of(ord, identity(bs_family(3))), UsageError);
  CHECK_THROWS_AS(sign_of(ord, identity(tararin_family(2))), UsageError);
  CHECK_THROWS_AS(conjugate(ord, identity(abelian_family(1))), UsageError);
}
