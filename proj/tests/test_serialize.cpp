#include "gdensity/serialize.hpp"
#include "gdensity/verify.hpp"

#include <doctest.h>

using namespace gdensity;

TEST_SUITE("serialize") {
  TEST_CASE("rationals round trip") {
    CHECK(rational_json(Rational(-3, 4)) == Json::array({-3, 4}));
    const Rational big = pow2(-100);
    const Json j = rational_json(big);
    CHECK(j[1].is_string());
    CHECK(rational_from_json(j) == big);
    CHECK(rational_from_json(Json("1/3")) == Rational(1, 3));
    CHECK(ext_from_json(Json("-inf")) == ExtRational::neg_inf());
  }

  TEST_CASE("set specs") {
    const auto a = parse_set_spec("(0,1)u(2,3)+{5}-{1/2}");
    CHECK(a.contains(Rational(1, 4)));
    CHECK_FALSE(a.contains(Rational(1, 2)));
    CHECK(a.contains(5));
    CHECK(parse_set_spec("(-inf,0)").contains(-100));
    CHECK(parse_set_spec("(0,1)u(1,2)").is_removed(1));
    CHECK(parse_set_spec("empty").kernel().measure_within(0, 1) == 0);
    CHECK(parse_set_spec("reals").contains(7));
    CHECK(parse_set_spec("dyadic-gap@1").kernel().anchor() == 1);
    CHECK_FALSE(parse_set_spec("dyadic-gap-u").contains(Rational(1, 4)));
    CHECK_FALSE(parse_set_spec("complement-reciprocals:100").contains(Rational(1, 3)));
    CHECK(parse_set_spec("complement:(0,1)").contains(2));
    CHECK(parse_set_spec(R"({"intervals": [[0, 1]], "added": [[3, 1]]})").contains(3));
    CHECK_THROWS_AS(parse_set_spec("(0,1"), ParseError);
    CHECK_THROWS_AS(parse_set_spec("(1,0)"), DomainError);
  }

  TEST_CASE("functions") {
    const auto f = function_from_json(Json::parse(R"({"pieces": [{"lo": "-inf", "hi": "inf", "poly": [1, 2]}]})"));
    CHECK(f(Rational(1, 2)) == 2);
    const auto b = function_from_json(Json::parse(R"({"special": "bump_sum", "n_max": 4})"));
    CHECK(b(bump_peak(4)) == 4);
    CHECK_THROWS(function_from_json(Json::parse(R"({"special": "nope"})")));
  }

  TEST_CASE("config overrides") {
    GridSpec g;
    Policy p;
    apply_overrides(Json::parse(R"({"K": 30, "W": 6, "alpha0": "1/8", "tol": 0.01})"), g, p);
    CHECK(g.K == 30);
    CHECK(g.alpha0 == Rational(1, 8));
    CHECK(p.window == 6);
    CHECK(p.tol == 0.01);
  }

  TEST_CASE("trace csv") {
    const auto t = ratio_trace(Modulus::identity(), Target(RationalIntervalSet::interval(0, 1)), 0, Side::Both,
                               GridSpec{Rational(1, 4), Rational(1, 2), 8});
    const auto csv = trace_csv(t);
    CHECK(csv.rfind("k,alpha_num,alpha_den,measure_num,measure_den,ratio\n", 0) == 0);
    CHECK(csv.find("0,1,4,1,4,0.5") != std::string::npos);
  }

  TEST_CASE("verify reports are deterministic") {
    VerifyOptions small;
    small.pairs = 5;
    small.points = 3;
    small.translations = 2;
    small.function_pairs = 4;
    const auto a = run_verify("all", 7, {}, {}, small).json().dump();
    const auto b = run_verify("all", 7, {}, {}, small).json().dump();
    CHECK(a == b);
    CHECK(a.find("\"seed\":7") != std::string::npos);
    CHECK_THROWS_AS(run_verify("nope", 1), ParseError);
  }
}
