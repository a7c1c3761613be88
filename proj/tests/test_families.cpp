#include "gdensity/scale_family.hpp"

#include <doctest.h>

using namespace gdensity;

TEST_SUITE("families") {
  TEST_CASE("dyadic gap intervals") {
    const Construction c(FamilyKind::DyadicGap, 0);
    CHECK(c.interval(1) == std::pair<Rational, Rational>(Rational(1, 4), Rational(11, 32)));
    CHECK(c.length(1) == Rational(3, 32));
    CHECK(c.prefix(1) == RationalIntervalSet::from_pairs({{Rational(-11, 32), Rational(-1, 4)},
                                                          {Rational(1, 4), Rational(11, 32)}}));
    CHECK(c.validity_radius() == Rational(1, 2));
  }

  TEST_CASE("bump support intervals") {
    const Construction c(FamilyKind::BumpSupport, 0);
    CHECK(c.prefix(2) == RationalIntervalSet::from_pairs({{Rational(1, 8), Rational(9, 64)},
                                                          {Rational(1, 4), Rational(5, 16)}}));
    CHECK(c.validity_radius() == Rational(1, 4));
  }

  // values computed by an independent exact oracle
  TEST_CASE("dyadic gap complement traces") {
    const auto b = ScaleFamily::dyadic_gap();
    CHECK(b.complement_trace_measure(Rational(1, 3)) == Rational(11, 48));
    CHECK(b.complement_trace_measure(Rational(3, 8)) == Rational(1, 4));
    CHECK(b.complement_trace_measure(Rational(1, 2)) == Rational(1, 4));
    CHECK(b.complement_trace_measure(Rational(1, 4)) == Rational(1, 16));
    CHECK(b.complement_trace_measure(Rational(5, 17)) == Rational(41, 272));
    CHECK(b.complement_trace_measure(Rational(1, 1000)) == Rational(1, 262144));
    for (long k = 1; k <= 60; ++k) CHECK(b.complement_trace_measure(pow2(-k)) == pow4(-k));
  }

  TEST_CASE("bump support complement traces") {
    const auto b = ScaleFamily::bump_support();
    CHECK(b.complement_trace_measure(Rational(1, 4)) == Rational(1, 48));
    CHECK(b.complement_trace_measure(Rational(1, 5)) == Rational(1, 48));
    CHECK(b.complement_trace_measure(Rational(3, 16)) == Rational(1, 48));
    CHECK(b.complement_trace_measure(Rational(1, 100)) == Rational(1, 12288));
    CHECK(b.complement_trace_measure(Rational(3, 1000)) == Rational(1, 196608));
    for (long k = 2; k <= 60; ++k) CHECK(b.complement_trace_measure(pow2(-k)) == pow4(-k) / 3);
  }

  TEST_CASE("membership") {
    const auto b = ScaleFamily::dyadic_gap();
    CHECK(b.contains(0));
    CHECK_FALSE(b.contains(Rational(3, 10)));
    CHECK(b.contains(Rational(1, 5)));
    CHECK(b.contains(Rational(-1, 5)));
    CHECK_FALSE(b.contains(Rational(-3, 10)));
    CHECK(b.construction().is_endpoint(Rational(1, 4)));
    CHECK(b.complement().contains(Rational(3, 10)));
  }

  TEST_CASE("translation moves the anchor") {
    const auto b = ScaleFamily::bump_support().translate(2);
    CHECK(b.anchor() == 2);
    CHECK(b.complement_trace_measure(Rational(1, 16)) == ScaleFamily::bump_support().complement_trace_measure(Rational(1, 16)));
    CHECK_FALSE(b.contains(Rational(9, 4) + Rational(1, 32)));
  }

  TEST_CASE("scale index below a radius") {
    CHECK(Construction::first_index_below(Rational(1, 3)) == 1);
    CHECK(Construction::first_index_below(Rational(1, 4)) == 2);
  }

  TEST_CASE("union with a finite set keeps exact window measures") {
    const auto e = RationalIntervalSet::interval(Rational(3, 10), 1);
    const auto s = ScaleFamily::dyadic_gap().union_with(e);
    CHECK(s.measure_within(Rational(3, 10), 1) == Rational(7, 10));
    CHECK(s.complement().measure_within(-1, 1) + s.measure_within(-1, 1) == 2);
  }

  TEST_CASE("family names") {
    CHECK(family_kind_from_string(to_string(FamilyKind::BumpSupport)) == FamilyKind::BumpSupport);
    CHECK_THROWS_AS(family_kind_from_string("nope"), ParseError);
  }
}
