#include <random>
#include <set>

#include "conradlab/ball.hpp"
#include "conradlab/element.hpp"
#include "conradlab/presentation.hpp"
#include "conradlab/word.hpp"
#include "doctest.h"

using namespace conradlab;

namespace {

GroupElement bs_elem(int ell, const Rat& r, int64_t n) {
  Int num = boost::multiprecision::numerator(r);
  Int den = boost::multiprecision::denominator(r);
  int64_t k = 0;
  while (den > 1) {
    REQUIRE(den % ell == 0);
    den /= ell;
    ++k;
  }
  return {bs_family(ell), BsElemT<Int>{make_lfraction(num, k, ell), n}};
}

GroupElement tar_elem(int n, std::vector<int> coords) {
  TarElemT<Int> e;
  for (int c : coords) e.b.push_back(Int(c));
  return {tararin_family(n), std::move(e)};
}

GroupElement zn_elem(int n, std::vector<int> coords) {
  ZnElemT<Int> e;
  for (int c : coords) e.v.push_back(Int(c));
  return {abelian_family(n), std::move(e)};
}

// x -> ell^n x + r, the affine shadow of a BS normal form
Rat bs_apply(const GroupElement& g, const Rat& x) {
  const auto& e = g.as_bs();
  return pow_rat(Rat(g.family().param), e.n) * x + lf_value(e.r);
}

// independent count oracle: enumerate raw words of length <= radius
size_t count_by_word_enumeration(const Family& f, int radius) {
  std::vector<GroupElement> gens;
  for (const auto& g : generators(f)) {
    gens.push_back(generator_power(f, g, 1));
    gens.push_back(generator_power(f, g, -1));
  }
  std::set<GroupElement, CanonicalLess> seen;
  std::vector<GroupElement> layer{identity(f)};
  seen.insert(identity(f));
  for (int r = 0; r < radius; ++r) {
    std::vector<GroupElement> next;
    for (const auto& w : layer)
      for (const auto& g : gens) next.push_back(multiply(w, g));
    for (const auto& x : next) seen.insert(x);
    layer = std::move(next);
  }
  return seen.size();
}

}  // namespace

TEST_CASE("BS multiplication normal forms") {
  Family f = bs_family(2);
  auto a = generator_power(f, {'a', 0}, 1);
  auto b = generator_power(f, {'b', 0}, 1);
  CHECK(multiply(a, a) == bs_elem(2, Rat(2), 0));
  // defining relation: b a b^-1 = a^2
  auto lhs = multiply(multiply(b, a), invert(b));
  CHECK(lhs == bs_elem(2, Rat(2), 0));
}

TEST_CASE("Tararin twisted product") {
  Family f = tararin_family(2);
  auto a2 = generator_power(f, {'a', 2}, 1);
  auto a1 = generator_power(f, {'a', 1}, 1);
  // a2 a1 a2^-1 = a1^-1
  auto conj = multiply(multiply(a2, a1), invert(a2));
  CHECK(conj == tar_elem(2, {0, -1}));
  CHECK(invert(a2) == tar_elem(2, {-1, 0}));
}

TEST_CASE("inversion examples") {
  CHECK(invert(bs_elem(2, Rat(1), -1)) == bs_elem(2, Rat(-2), 1));
  CHECK(multiply(bs_elem(2, Rat(1), -1), invert(bs_elem(2, Rat(1), -1))) ==
        identity(bs_family(2)));
  Family t2 = tararin_family(2);
  CHECK(invert(identity(t2)) == identity(t2));

  // brute-force oracle: the inverse of (1,1) is the unique ball element
  // multiplying to the identity
  auto g = tar_elem(2, {1, 1});
  Ball ball = generate_ball(t2, 2);
  GroupElement found = identity(t2);
  int hits = 0;
  for (const auto& x : ball.elements()) {
    if (multiply(g, x).is_identity()) {
      found = x;
      ++hits;
    }
  }
  CHECK(hits == 1);
  CHECK(found == tar_elem(2, {-1, 1}));
  CHECK(invert(g) == found);
}

TEST_CASE("word evaluation") {
  Family f = bs_family(2);
  CHECK(eval_word(f, parse_word(f, "b^-1 a^2")) == bs_elem(2, Rat(1), -1));
  CHECK(eval_word(f, parse_word(f, "")) == identity(f));
  CHECK(eval_word(f, parse_word(f, "id")) == identity(f));

  // compose affine maps x -> x/4, x -> x+5, x -> x/2 left to right
  auto g = eval_word(f, parse_word(f, "b^-2 a^5 b^-1"));
  CHECK(g == bs_elem(2, Rat(5, 4), -3));
  Rat x(7, 3);
  Rat expect = bs_apply(eval_word(f, parse_word(f, "b^-2")),
                        bs_apply(eval_word(f, parse_word(f, "a^5")),
                                 bs_apply(eval_word(f, parse_word(f, "b^-1")), x)));
  CHECK(bs_apply(g, x) == expect);

  CHECK_THROWS_AS(parse_word(f, "q^2"), UsageError);
  CHECK_THROWS_AS(parse_word(f, "a3"), UsageError);
  CHECK_THROWS_AS(parse_word(tararin_family(2), "a5"), UsageError);
}

TEST_CASE("ball generation basics") {
  Family f = bs_family(2);
  Ball b0 = generate_ball(f, 0);
  CHECK(b0.size() == 1);
  CHECK(b0.at(0).is_identity());

  Ball b1 = generate_ball(f, 1);
  CHECK(b1.size() == 5);

  Ball z2 = generate_ball(abelian_family(2), 2);
  CHECK(z2.size() == 13);
  CHECK(z2.size() == count_by_word_enumeration(abelian_family(2), 2));
}

TEST_CASE("ball counts match independent word enumeration") {
  for (const Family& f : {bs_family(2), tararin_family(2), cn_family(2), abelian_family(3)}) {
    Ball ball = generate_ball(f, 3);
    CHECK(ball.size() == count_by_word_enumeration(f, 3));
  }
}

TEST_CASE("ball monotonicity and closure") {
  for (const Family& f : {bs_family(2), tararin_family(3), cn_family(2)}) {
    Ball small = generate_ball(f, 2);
    Ball big = generate_ball(f, 3);
    for (const auto& g : small.elements()) {
      CHECK(big.contains(g));
      CHECK(big.contains(invert(g)));
      CHECK(*big.word_length(g) == *small.word_length(g));
    }
    // word length is subadditive where the product stays inside
    for (size_t i = 0; i < small.size(); i += 3) {
      for (size_t j = 0; j < small.size(); j += 3) {
        auto prod = multiply(small.at(i), small.at(j));
        auto len = big.word_length(prod);
        if (len)
          CHECK(*len <= small.word_length_at(i) + small.word_length_at(j));
      }
    }
  }
}

TEST_CASE("ball cap raises an explicit error") {
  CHECK_THROWS_AS(generate_ball(bs_family(2), 6, 50), ResourceCapError);
}

TEST_CASE("associativity on radius-3 balls") {
  for (const Family& f : {bs_family(2), tararin_family(2), abelian_family(2)}) {
    Ball ball = generate_ball(f, 3);
    for (const auto& g : ball.elements())
      for (const auto& h : ball.elements()) {
        auto gh = multiply(g, h);
        for (size_t k = 0; k < ball.size(); k += 7) {
          const auto& kk = ball.at(k);
          CHECK(multiply(gh, kk) == multiply(g, multiply(h, kk)));
        }
      }
  }
}

TEST_CASE("inverse law on radius-4 balls") {
  for (const Family& f : {bs_family(2), tararin_family(3), cn_family(2), abelian_family(2)}) {
    Ball ball = generate_ball(f, 4);
    for (const auto& g : ball.elements()) {
      CHECK(multiply(g, invert(g)).is_identity());
      CHECK(multiply(invert(g), g).is_identity());
    }
  }
}

TEST_CASE("BS normal forms agree with affine composition on random points") {
  std::mt19937 rng(999);
  std::uniform_int_distribution<int> num(-50, 50);
  std::uniform_int_distribution<int> den(1, 20);
  Ball ball = generate_ball(bs_family(2), 4);
  std::uniform_int_distribution<size_t> pick(0, ball.size() - 1);
  for (int trial = 0; trial < 20; ++trial) {
    const auto& g = ball.at(pick(rng));
    const auto& h = ball.at(pick(rng));
    Rat x(num(rng), den(rng));
    CHECK(bs_apply(multiply(g, h), x) == bs_apply(g, bs_apply(h, x)));
  }
}

TEST_CASE("C_n product respects the parity twist and is well-defined") {
  Family f = cn_family(2);
  auto b = generator_power(f, {'b', 0}, 1);
  auto a2 = generator_power(f, {'a', 2}, 1);
  auto a1 = generator_power(f, {'a', 1}, 1);
  auto c = generator_power(f, {'c', 0}, 1);
  // b a_n b^-1 = a_n^-1
  CHECK(multiply(multiply(b, a2), invert(b)) == invert(a2));
  // c b c^-1 = b^3
  CHECK(multiply(multiply(c, b), invert(c)) == element_power(b, 3));
  // c commutes with the a-part
  CHECK(multiply(c, a1) == multiply(a1, c));

  // d written with unnormalized input normalizes to the same element and the
  // same products (parity of the numerator is representation-invariant)
  CnElemT<Int> raw1;
  raw1.d = make_lfraction(Int(5), 1, 3);
  raw1.a.resize(2, Int(0));
  CnElemT<Int> raw2;
  raw2.d = make_lfraction(Int(15), 2, 3);
  raw2.a.resize(2, Int(0));
  GroupElement x1{f, raw1}, x2{f, raw2};
  CHECK(x1 == x2);
  CHECK(multiply(x1, a2) == multiply(x2, a2));
}

TEST_CASE("family mismatch is a usage error") {
  CHECK_THROWS_AS(multiply(identity(bs_family(2)), identity(bs_family(3))), UsageError);
  CHECK_THROWS_AS(multiply(identity(tararin_family(2)), identity(abelian_family(2))),
                  UsageError);
}

TEST_CASE("packed SafeI64 instantiation matches canonical arithmetic") {
  Ball ball = generate_ball(cn_family(2), 3);
  for (size_t i = 0; i < ball.size(); i += 5) {
    for (size_t j = 0; j < ball.size(); j += 5) {
      auto canonical = cn_mul(ball.at(i).as_cn(), ball.at(j).as_cn());
      auto packed = cn_mul(pack_cn(ball.at(i).as_cn()), pack_cn(ball.at(j).as_cn()));
      CHECK(canonical == CnElemT<Int>{packed.c,
                                      make_lfraction(Int(packed.d.num.v), packed.d.k, 3),
                                      [&] {
                                        CoordVec<Int> v;
                                        for (auto s : packed.a) v.push_back(Int(s.v));
                                        return v;
                                      }()});
    }
  }
}

TEST_CASE("compact element round trip") {
  Family f = bs_family(2);
  auto g = bs_elem(2, Rat(5, 4), -3);
  CHECK(compact_str(g) == "BS(5/4,-3)");
  CHECK(parse_compact(f, compact_str(g)) == g);

  Family c3 = cn_family(3);
  Ball ball = generate_ball(c3, 2);
  for (const auto& x : ball.elements()) CHECK(parse_compact(c3, compact_str(x)) == x);

  Family z2 = abelian_family(2);
  CHECK(parse_compact(z2, "Z(3,-1)") == zn_elem(2, {3, -1}));
}
