#include "gdensity/interval_set.hpp"

#include <doctest.h>

using namespace gdensity;

namespace {

RationalIntervalSet set(std::initializer_list<std::pair<Rational, Rational>> parts) {
  return RationalIntervalSet::from_pairs(parts);
}

}  // namespace

TEST_SUITE("interval") {
  TEST_CASE("parse rationals") {
    CHECK(parse_rational("1/3") == Rational(1, 3));
    CHECK(parse_rational("-0.25") == Rational(-1, 4));
    CHECK(parse_rational("1e-3") == Rational(1, 1000));
    CHECK(parse_rational("2.5E2") == Rational(250));
    CHECK(parse_rational("010/03") == Rational(10, 3));
    CHECK_THROWS_AS(parse_rational("0x10"), ParseError);
    CHECK(to_string(Rational(6, 4)) == "3/2");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
    CHECK_THROWS_AS(parse_rational("1e99999"), ParseError);
  }

  TEST_CASE("powers of two and four") {
    CHECK(pow2(-3) == Rational(1, 8));
    CHECK(pow4(2) == 16);
    CHECK(floor_log2(Rational(1, 3)) == -2);
    CHECK(floor_log2(Rational(8)) == 3);
  }

  TEST_CASE("normalize merges overlaps and touching intervals") {
    const auto s = set({{0, 1}, {1, 2}, {Rational(1, 2), Rational(3, 2)}, {5, 6}});
    REQUIRE(s.size() == 2);
    CHECK(s.intervals()[0] == Interval{Rational(0), Rational(2)});
    CHECK(s.measure() == 3);
    CHECK_THROWS_AS(set({{1, 0}}), DomainError);
  }

  TEST_CASE("open intervals exclude their endpoints") {
    const auto s = set({{0, 1}});
    CHECK_FALSE(s.contains(0));
    CHECK(s.contains(Rational(1, 2)));
    CHECK_FALSE(s.contains(1));
    CHECK(s.is_endpoint(1));
  }

  TEST_CASE("complement of a bounded union") {
    const auto s = set({{0, 1}, {2, 3}});
    const auto c = s.complement();
    REQUIRE(c.size() == 3);
    CHECK(c.unbounded_left());
    CHECK(c.unbounded_right());
    CHECK(c.measure_within(-1, 4) == 3);
    CHECK(s.complement_within(0, 3).measure() == 1);
    CHECK(RationalIntervalSet::empty().complement() == RationalIntervalSet::real_line());
  }

  TEST_CASE("set operations") {
    const auto a = set({{0, 2}});
    const auto b = set({{1, 3}});
    CHECK(a.intersect(b) == set({{1, 2}}));
    CHECK(a.unite(b) == set({{0, 3}}));
    CHECK(a.difference(b) == set({{0, 1}}));
    CHECK(a.symmetric_difference(b).measure() == 2);
    CHECK(a.translate(Rational(1, 2)) == set({{Rational(1, 2), Rational(5, 2)}}));
    CHECK(a.reflect() == set({{-2, 0}}));
    CHECK(set({{Rational(1, 2), 1}}).subset_of(a));
  }

  TEST_CASE("measure inside a window, bounded and unbounded") {
    CHECK(RationalIntervalSet::real_line().measure_within(-2, 3) == 5);
    CHECK(RationalIntervalSet::right_ray(1).measure_within(0, 4) == 3);
    CHECK_THROWS_AS(RationalIntervalSet::right_ray(1).measure(), DomainError);
    CHECK(set({{0, 1}}).measure_within(Rational(1, 2), 5) == Rational(1, 2));
  }

  TEST_CASE("one- and two-sided traces") {
    const auto s = set({{0, 1}});
    CHECK(s.trace_measure(0, Rational(1, 4), Side::Right) == Rational(1, 4));
    CHECK(s.trace_measure(0, Rational(1, 4), Side::Left) == 0);
    CHECK(s.trace_measure(0, Rational(1, 4), Side::Both) == Rational(1, 4));
    CHECK(s.trace_measure(1, 2, Side::Both) == 1);
  }
}
