#include "gdensity/topology.hpp"

#include <doctest.h>

using namespace gdensity;

TEST_SUITE("topology") {
  TEST_CASE("representable sets") {
    const auto r = RepresentableSet::from_raw_intervals({{0, 1}, {1, 2}});
    CHECK_FALSE(r.contains(1));
    CHECK(r.contains(Rational(1, 2)));
    CHECK(r.is_removed(1));
    RepresentableSet s(RationalIntervalSet::interval(0, 1));
    s.add(5).remove(Rational(1, 2));
    CHECK(s.contains(5));
    CHECK_FALSE(s.contains(Rational(1, 2)));
    const auto n = RepresentableSet::null_set({}, {CountableFamily::reciprocals()});
    CHECK(n.contains(Rational(1, 7)));
    CHECK(n.contains(0));
    CHECK_FALSE(n.contains(Rational(2, 7)));
  }

  TEST_CASE("countable families") {
    const auto q = CountableFamily::rationals_in(0, 1);
    CHECK(q.contains(Rational(3, 7)));
    CHECK_FALSE(q.contains(1));
    CHECK(q.infinite());
    CHECK(q.members(5).size() == 5);
    const auto r = CountableFamily::reciprocals(10);
    CHECK_FALSE(r.infinite());
    CHECK_FALSE(r.contains(Rational(1, 11)));
    const auto e = CountableFamily::construction_endpoints(FamilyKind::DyadicGap);
    CHECK(e.contains(Rational(1, 4)));
    CHECK(e.contains(Rational(-11, 32)));
  }

  TEST_CASE("finite unions are open, null points are not") {
    RepresentableSet s(RationalIntervalSet::interval(0, 1));
    CHECK(is_gamma_open(Modulus::log(), s).status == OpenStatus::Open);
    s.add(3);
    const auto v = is_gamma_open(Modulus::identity(), s);
    CHECK(v.status == OpenStatus::NotOpen);
    REQUIRE(v.witness);
    CHECK(*v.witness == 3);
  }

  TEST_CASE("the dyadic gap open set") {
    const auto u = RepresentableSet::dyadic_gap_density_set();
    CHECK(u.contains(0));
    CHECK_FALSE(u.contains(Rational(1, 4)));
    CHECK(is_gamma_open(Modulus::identity(), u).status == OpenStatus::Open);
    CHECK(is_gamma_open(Modulus::power(Rational(1, 2)), u).status == OpenStatus::Open);
    const auto v = is_gamma_open(Modulus::log(), u);
    CHECK(v.status == OpenStatus::NotOpen);
    REQUIRE(v.witness);
    CHECK(*v.witness == 0);
    const auto b = is_gamma_open(Modulus::identity(), RepresentableSet(ScaleFamily::dyadic_gap()));
    CHECK(b.status == OpenStatus::NotOpen);
    REQUIRE(b.witness);
    CHECK(*b.witness == Rational(1, 4));
  }

  // m(2^-k) / (2^(1-k) psi(2^(1-k))) = 1/4 at the anchor for psi(t) = t
  TEST_CASE("psi openness") {
    PsiDescriptor lin;
    CHECK(is_psi_open(lin, RepresentableSet(RationalIntervalSet::interval(0, 1))).status == OpenStatus::Open);
    const auto u = is_psi_open(lin, RepresentableSet::dyadic_gap_density_set());
    CHECK(u.status == OpenStatus::NotOpen);
    REQUIRE(u.witness);
    CHECK(*u.witness == 0);
  }

  TEST_CASE("interior needs a certificate") {
    RepresentableSet s(RationalIntervalSet::interval(0, 1));
    s.add(2);
    const auto in = interior(Modulus::identity(), s, {Rational(1, 2), 0, 2});
    CHECK(in == std::vector<Truth>{Truth::Yes, Truth::No, Truth::No});
    CHECK_THROWS_AS(interior(Modulus::log(), s, {0}), HypothesisError);
  }

  TEST_CASE("limit points") {
    const RepresentableSet s(RationalIntervalSet::interval(0, 1));
    CHECK(limit_point_test(Modulus::identity(), s, 0) == LimitStatus::LimitPoint);
    CHECK(limit_point_test(Modulus::identity(), s, 2) == LimitStatus::NotLimitPoint);
    const auto n = RepresentableSet::null_set({Rational(1, 2)});
    CHECK(limit_point_test(Modulus::log(), n, Rational(1, 2)) == LimitStatus::NotLimitPoint);
  }

  TEST_CASE("complement of the reciprocals") {
    for (const auto& g : modulus_catalog()) {
      const auto r = countable_closed_check(g, {}, {CountableFamily::reciprocals(10000)}, {Rational(1, 2), Rational(2, 3)});
      CHECK(r.complement_open);
      CHECK(r.all_traces_zero);
      CHECK(r.singletons_relatively_open);
      CHECK(r.members_checked > 0);
      CHECK_FALSE(r.infinite);
      CHECK(r.samples.size() == 2);
    }
    const auto q = countable_closed_check(Modulus::identity(), {}, {CountableFamily::rationals_in(0, 1)}, {});
    CHECK(q.infinite);
    CHECK(q.no_finite_subcover);
  }

  TEST_CASE("interior and closure differ from A by null sets") {
    RepresentableSet s(RationalIntervalSet::from_pairs({{0, 1}, {2, 3}}));
    s.add(5).remove(Rational(1, 2));
    const auto r = interior_closure_null_check(Modulus::identity(), s);
    CHECK(r.null);
    CHECK(r.interior_difference == std::vector<Rational>{5});
    CHECK(r.interior_difference_measure == 0);
    CHECK(r.closure_difference_measure == 0);
    CHECK_FALSE(r.closure_difference.empty());
    CHECK_THROWS_AS(interior_closure_null_check(Modulus::identity(), RepresentableSet(ScaleFamily::dyadic_gap())),
                    DomainError);
  }

  TEST_CASE("regularity witness") {
    const auto v = RationalIntervalSet::from_pairs({{-1, 1}});
    const auto w = regularity_witness(v, Rational(1, 2));
    CHECK(w.measure == 1);
    CHECK(w.exceeds);
  }
}
