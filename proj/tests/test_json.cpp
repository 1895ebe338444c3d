#include <sstream>

#include "conradlab/ball.hpp"
#include "conradlab/json_io.hpp"
#include "conradlab/word.hpp"
#include "doctest.h"

using namespace conradlab;

namespace {

const Family kBs2 = bs_family(2);

QuadraticNumber sqrt2() { return QuadraticNumber::sqrt_of(2); }

}  // namespace

TEST_CASE("element JSON matches the documented shape") {
  GroupElement g{kBs2, BsElemT<Int>{make_lfraction(Int(5), 2, 2), -3}};
  Json j = element_to_json(g);
  CHECK(j == Json::parse(R"({"family":"BS","ell":2,"r":{"num":5,"k":2},"n":-3})"));
  CHECK(element_from_json(j) == g);
}

TEST_CASE("quadratic JSON uses exact strings") {
  QuadraticNumber x(Rat(3, 4), Rat(1), 2);
  Json j = quadratic_to_json(x);
  CHECK(j == Json::parse(R"({"p":"3/4","q":"1","d":2})"));
  CHECK(quadratic_from_json(j) == x);
}

TEST_CASE("element round trips across families") {
  for (const Family& f :
       {bs_family(3), tararin_family(3), cn_family(2), abelian_family(2)}) {
    Ball ball = generate_ball(f, 2);
    for (const auto& g : ball.elements()) {
      CHECK(element_from_json(element_to_json(g)) == g);
    }
  }
}

TEST_CASE("oversized coordinates fall back to strings") {
  Family z = abelian_family(1);
  GroupElement g{z, ZnElemT<Int>{{pow_int(Int(2), 80)}}};
  Json j = element_to_json(g);
  CHECK(j["v"][0].is_string());
  CHECK(element_from_json(j) == g);
}

TEST_CASE("descriptor round trips exactly") {
  std::vector<OrderingDescriptor> catalogue;
  catalogue.push_back(make_flip(kBs2, "01"));
  catalogue.push_back(make_flip(cn_family(3), "01101"));
  catalogue.push_back(make_smirnov(2, sqrt2()));
  catalogue.push_back(
      make_smirnov(3, QuadraticNumber(Rat(3, 4)), SmirnovOrder::Side::MinusLimit, true));
  catalogue.push_back(make_slope({sqrt2(), QuadraticNumber(Rat(1))}, {1, 0}));
  catalogue.push_back(opposite(make_slope({sqrt2(), QuadraticNumber(Rat(1))})));
  catalogue.push_back(
      conjugate(make_smirnov(2, sqrt2()), eval_word(kBs2, parse_word(kBs2, "b a^-1"))));

  for (const auto& ord : catalogue) {
    Json j = descriptor_to_json(ord);
    auto back = descriptor_from_json(j);
    CHECK(descriptor_to_json(back) == j);
    // same oracle after the round trip
    Ball ball = generate_ball(ord.family(), 3);
    for (const auto& g : ball.elements()) CHECK(sign_of(ord, g) == sign_of(back, g));
  }
}

TEST_CASE("descriptor validation also guards JSON input") {
  Json bad = Json::parse(
      R"({"kind":"smirnov","ell":2,"epsilon":{"p":"1","q":"0","d":0},"side":"exact"})");
  CHECK_THROWS_AS(descriptor_from_json(bad), UsageError);
}

TEST_CASE("certificate round trip with its action") {
  auto xi = AffineAction::standard_bs(2);
  Ball ball = generate_ball(kBs2, 5);
  auto cert = detect_crossing(xi, ball, {sqrt2()});
  REQUIRE(cert.has_value());
  Json j = certificate_to_json(*cert, &xi);
  CHECK(j["schema"] == 1);
  CHECK(j["mode"] == "affine-exact");
  auto cert2 = certificate_from_json(j);
  auto action2 = action_from_json(j["action"]);
  CHECK(verify_crossing(cert2, action2).valid);
  CHECK(certificate_to_json(cert2, &action2) == j);
}

TEST_CASE("realization CSV round trip") {
  auto ord = make_smirnov(2, sqrt2());
  Ball ball = generate_ball(kBs2, 3);
  auto table = dynamical_realization(ord, ball);
  std::stringstream buf;
  realization_to_csv(table, buf);
  std::string first_line = buf.str().substr(0, buf.str().find('\n'));
  CHECK(first_line == "element,t");

  auto back = realization_from_csv(kBs2, buf);
  REQUIRE(back.entries.size() == table.entries.size());
  for (size_t i = 0; i < table.entries.size(); ++i) {
    CHECK(back.entries[i].first == table.entries[i].first);
    CHECK(back.entries[i].second == table.entries[i].second);
  }
}

TEST_CASE("report serializers emit the documented skeletons") {
  Ball ball = generate_ball(kBs2, 4);
  auto report = conradian_check(make_smirnov(2, sqrt2()), ball);
  Json j = conradian_report_to_json(report);
  CHECK(j["check"] == "conradian");
  if (!report.pass) {
    CHECK(j["result"] == "witness");
    CHECK(j.contains("f"));
    CHECK(j.contains("g"));
    CHECK(j["radius"] == 4);
  }

  auto tree = cantor_tree({make_flip(kBs2, "00"), make_flip(kBs2, "11")}, 2);
  Json tj = cantor_tree_to_json(tree);
  CHECK(tj.contains("pattern_hash"));
  CHECK(tj.contains("children"));
}
