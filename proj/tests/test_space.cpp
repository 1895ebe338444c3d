#include <algorithm>

#include "conradlab/ball.hpp"
#include "conradlab/conradian.hpp"
#include "conradlab/space.hpp"
#include "conradlab/word.hpp"
#include "doctest.h"

using namespace conradlab;

namespace {

const Family kBs2 = bs_family(2);

QuadraticNumber sqrt2() { return QuadraticNumber::sqrt_of(2); }
QuadraticNumber q(int64_t num, int64_t den = 1) { return QuadraticNumber(Rat(num, den)); }

OrderingDescriptor smirnov(QuadraticNumber eps,
                           SmirnovOrder::Side side = SmirnovOrder::Side::Exact,
                           bool opp = false) {
  return make_smirnov(2, std::move(eps), side, opp);
}

}  // namespace

TEST_CASE("agreement radius basics") {
  auto ord = smirnov(sqrt2());
  auto self = agreement_radius(ord, ord, 8);
  CHECK(!self.disagrees());
  CHECK(self.distance() == "<=1/2^8");

  auto flips = agreement_radius(make_flip(kBs2, "00"), make_flip(kBs2, "01"), 8);
  REQUIRE(flips.disagrees());
  CHECK(*flips.first_disagreement_radius == 1);
  CHECK(flips.distance() == "1/2^1");

  CHECK_THROWS_AS(
      agreement_radius(ord, make_slope({q(1)}), 4), UsageError);
}

TEST_CASE("agreement reacts to basepoint perturbations across thresholds") {
  // pick a perturbed basepoint inside the Ball(4) gap of sqrt2 but outside
  // its Ball(8) gap
  Ball b4 = generate_ball(kBs2, 4);
  Ball b8 = generate_ball(kBs2, 8);
  auto t4 = smirnov_thresholds(2, b4);
  auto t8 = smirnov_thresholds(2, b8);
  auto gap4 = gap_around(t4, sqrt2(), 0);
  auto gap8 = gap_around(t8, sqrt2(), 0);
  REQUIRE(gap4.hi.has_value());
  REQUIRE(gap8.hi.has_value());
  REQUIRE(*gap8.hi < *gap4.hi);  // the finer ball has a strictly tighter gap

  // a rational point between the two upper thresholds, taken with + side
  Rat eps2 = (*gap8.hi + *gap4.hi) / 2;
  auto perturbed = smirnov(QuadraticNumber(eps2), SmirnovOrder::Side::PlusLimit);
  auto base = smirnov(sqrt2());
  auto near = agreement_radius(base, perturbed, 4);
  CHECK(!near.disagrees());
  auto far = agreement_radius(base, perturbed, 8);
  REQUIRE(far.disagrees());
  CHECK(*far.first_disagreement_radius > 4);
}

TEST_CASE("ultrametric inequality on a descriptor sample") {
  std::vector<OrderingDescriptor> sample;
  for (auto bits : {"00", "01", "10", "11"}) sample.push_back(make_flip(kBs2, bits));
  sample.push_back(smirnov(sqrt2()));
  sample.push_back(smirnov(q(1) + sqrt2()));
  sample.push_back(smirnov(QuadraticNumber::sqrt_of(3)));
  sample.push_back(smirnov(q(3), SmirnovOrder::Side::PlusLimit));
  sample.push_back(smirnov(q(3), SmirnovOrder::Side::MinusLimit));
  sample.push_back(smirnov(q(-1, 2), SmirnovOrder::Side::PlusLimit));
  sample.push_back(smirnov(sqrt2(), SmirnovOrder::Side::Exact, true));

  const int r_max = 6;
  const int inf = r_max + 1;
  std::vector<std::vector<int>> radius(sample.size(), std::vector<int>(sample.size(), inf));
  for (size_t i = 0; i < sample.size(); ++i)
    for (size_t j = i + 1; j < sample.size(); ++j) {
      auto rep = agreement_radius(sample[i], sample[j], r_max);
      int n = rep.disagrees() ? *rep.first_disagreement_radius : inf;
      radius[i][j] = radius[j][i] = n;
    }
  // dist(x,z) <= max(dist(x,y), dist(y,z)) reads n_xz >= min(n_xy, n_yz)
  for (size_t x = 0; x < sample.size(); ++x)
    for (size_t y = 0; y < sample.size(); ++y)
      for (size_t z = 0; z < sample.size(); ++z) {
        if (x == y || y == z || x == z) continue;
        CHECK(radius[x][z] >= std::min(radius[x][y], radius[y][z]));
      }
}

TEST_CASE("isolation probe: flip orderings approximated by basepoint orderings") {
  for (auto bits : {"00", "01", "10", "11"}) {
    auto ord = make_flip(kBs2, bits);
    for (int radius = 1; radius <= 6; ++radius) {
      auto result = isolation_probe(ord, CandidatePool::SmirnovFamily, radius);
      REQUIRE(result.approximant.has_value());
      REQUIRE(result.distinctness_witness.has_value());
      // verified: agree on the ball, differ at the witness
      CHECK(sign_of(ord, *result.distinctness_witness) !=
            sign_of(*result.approximant, *result.distinctness_witness));
      Ball ball = generate_ball(kBs2, radius);
      for (const auto& g : ball.elements())
        CHECK(sign_of(ord, g) == sign_of(*result.approximant, g));
    }
  }
}

TEST_CASE("isolation probe fails over the finite C-ordering pool") {
  for (auto bits : {"00", "01", "10", "11"}) {
    auto ord = make_flip(kBs2, bits);
    for (int radius = 1; radius <= 6; ++radius) {
      auto result = isolation_probe(ord, CandidatePool::COrderingFamily, radius);
      CHECK(!result.approximant.has_value());
      CHECK(result.candidates_tried == 3);
    }
  }
}

TEST_CASE("isolation probe on slope orderings") {
  // rational directions: an irrational nudge below the ball thresholds
  for (auto dir : {std::pair{1, 0}, {0, 1}, {1, 1}, {1, -1}, {2, 1}, {3, -2}}) {
    auto ord = make_slope({q(dir.first), q(dir.second)});
    for (int radius : {2, 5, 8}) {
      auto result = isolation_probe(ord, CandidatePool::SlopeNeighbors, radius);
      REQUIRE(result.approximant.has_value());
      Ball ball = generate_ball(abelian_family(2), radius);
      for (const auto& g : ball.elements())
        CHECK(sign_of(ord, g) == sign_of(*result.approximant, g));
      CHECK(sign_of(ord, *result.distinctness_witness) !=
            sign_of(*result.approximant, *result.distinctness_witness));
    }
  }

  // irrational direction: continued-fraction approximants with lex refinement
  auto irr = make_slope({sqrt2(), q(1)});
  auto result = isolation_probe(irr, CandidatePool::SlopeNeighbors, 8);
  REQUIRE(result.approximant.has_value());
  CHECK(result.approximant->as_slope()->direction[0].is_rational());
}

TEST_CASE("convergence of basepoint orderings toward a flip ordering") {
  std::vector<OrderingDescriptor> seq;
  for (int k = 1; k <= 12; ++k)
    seq.push_back(smirnov(QuadraticNumber(Rat(0), Rat(Int(1) << k), 2)));  // 2^k sqrt2
  auto report = convergence_check(seq, make_flip(kBs2, "00"), 5);
  REQUIRE(report.agrees_from.has_value());
  CHECK(*report.agrees_from > 0);

  auto constant = convergence_check({seq[3], seq[3]}, seq[3], 5);
  REQUIRE(constant.agrees_from.has_value());
  CHECK(*constant.agrees_from == 0);

  std::vector<OrderingDescriptor> to_sqrt2;
  for (int k = 1; k <= 12; ++k)
    to_sqrt2.push_back(smirnov(sqrt2() + QuadraticNumber(Rat(1, Int(1) << k))));
  auto report2 = convergence_check(to_sqrt2, smirnov(sqrt2()), 5);
  REQUIRE(report2.agrees_from.has_value());

  // a sequence that never reaches the limit on this ball
  auto never = convergence_check({make_flip(kBs2, "01"), make_flip(kBs2, "10")},
                                 make_flip(kBs2, "00"), 3);
  CHECK(!never.agrees_from.has_value());
}

TEST_CASE("conjugacy orbit probe steers basepoints between gaps") {
  SmirnovOrder from{2, sqrt2(), SmirnovOrder::Side::Exact, false};
  SmirnovOrder target{2, q(5), SmirnovOrder::Side::PlusLimit, false};
  for (int radius : {2, 4}) {
    auto g = conjugacy_orbit_probe(from, target, radius);
    REQUIRE(g.has_value());
    auto conj = conjugate(make_smirnov(2, sqrt2()), *g);
    auto target_desc = make_smirnov(2, q(5), SmirnovOrder::Side::PlusLimit);
    Ball ball = generate_ball(kBs2, radius);
    for (const auto& x : ball.elements())
      CHECK(sign_of(conj, x) == sign_of(target_desc, x));
  }

  // identical basepoints need no motion
  auto same = conjugacy_orbit_probe(from, from, 4);
  REQUIRE(same.has_value());
  CHECK(same->is_identity());

  // targets with a negative live in the complementary subspace
  SmirnovOrder opposite_target{2, q(5), SmirnovOrder::Side::PlusLimit, true};
  CHECK_THROWS_AS(conjugacy_orbit_probe(from, opposite_target, 4), UsageError);
}

TEST_CASE("cantor tree separates descriptors into leaves") {
  std::vector<OrderingDescriptor> flips;
  for (auto bits : {"00", "01", "10", "11"}) flips.push_back(make_flip(kBs2, bits));
  auto tree = cantor_tree(flips, 2);
  CHECK(tree.leaf_count() == 4);
  CHECK(tree.branching_nodes() >= 1);

  auto single = cantor_tree({smirnov(sqrt2())}, 4);
  CHECK(single.leaf_count() == 1);
  CHECK(single.branching_nodes() == 0);  // a path
}

TEST_CASE("cantor tree refines: denser basepoint samples keep branching") {
  // one descriptor per threshold gap in a window, at two densities
  Ball ball = generate_ball(kBs2, 4);
  auto thresholds = smirnov_thresholds(2, ball);
  auto sample_gaps = [&](size_t max_count) {
    std::vector<OrderingDescriptor> out;
    for (size_t i = 0; i + 1 < thresholds.size() && out.size() < max_count; ++i) {
      if (thresholds[i] < Rat(-3) || thresholds[i + 1] > Rat(3)) continue;
      if (thresholds[i] == thresholds[i + 1]) continue;
      Rat mid = (thresholds[i] + thresholds[i + 1]) / 2;
      out.push_back(smirnov(QuadraticNumber(mid), SmirnovOrder::Side::PlusLimit));
    }
    return out;
  };
  auto coarse = sample_gaps(16);
  auto fine = sample_gaps(64);
  REQUIRE(fine.size() > coarse.size());

  auto coarse_tree = cantor_tree(coarse, 4);
  auto fine_tree = cantor_tree(fine, 4);
  // distinct gaps are distinct sign patterns on the ball
  CHECK(coarse_tree.leaf_count() == coarse.size());
  CHECK(fine_tree.leaf_count() == fine.size());
  CHECK(fine_tree.branching_nodes() >= coarse_tree.branching_nodes());
}

TEST_CASE("sign patterns are constant on threshold gaps") {
  Ball ball = generate_ball(kBs2, 4);
  auto thresholds = smirnov_thresholds(2, ball);
  REQUIRE(thresholds.size() > 4);
  size_t i = thresholds.size() / 2;
  if (thresholds[i] == thresholds[i + 1]) ++i;
  Rat lo = thresholds[i], hi = thresholds[i + 1];
  auto inside1 = smirnov(QuadraticNumber(lo + (hi - lo) / 3), SmirnovOrder::Side::PlusLimit);
  auto inside2 = smirnov(QuadraticNumber(lo + (hi - lo) * 2 / 3), SmirnovOrder::Side::PlusLimit);
  CHECK(!agreement_radius(inside1, inside2, 4).disagrees());

  // stepping across the threshold changes the pattern at the crossed element
  auto outside = smirnov(QuadraticNumber(hi + (hi - lo) / 3), SmirnovOrder::Side::PlusLimit);
  CHECK(agreement_radius(inside1, outside, 4).disagrees());
}
