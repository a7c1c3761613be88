#include "gdensity/approx_continuity.hpp"

#include <doctest.h>

using namespace gdensity;

TEST_SUITE("approx") {
  TEST_CASE("piecewise polynomials") {
    PiecewisePoly p;
    p.pieces.push_back({ExtRational::neg_inf(), ExtRational(0), {1}});
    p.pieces.push_back({ExtRational(0), ExtRational(2), {0, 0, 1}});
    p.point_values[1] = 7;
    CHECK(p(-5) == 1);
    CHECK(p(Rational(1, 2)) == Rational(1, 4));
    CHECK(p(1) == 7);
    CHECK(p(3) == 0);
    CHECK(p.limit_from_left(0) == 1);
    CHECK(p.limit_from_right(0) == 0);
    CHECK_FALSE(p.continuous_at(0));
    CHECK_FALSE(p.continuous_at(1));
    CHECK(PiecewisePoly::abs()(-3) == 3);
    CHECK(PiecewisePoly::sign()(0) == 0);
    PiecewisePoly overlap;
    overlap.pieces.push_back({ExtRational(0), ExtRational(2), {1}});
    overlap.pieces.push_back({ExtRational(1), ExtRational(3), {1}});
    CHECK_THROWS_AS(overlap.validate(), DomainError);
  }

  TEST_CASE("bump sum peaks") {
    CHECK(bump_peak(3) == Rational(33, 512));
    const auto f = Function::bump_sum(10);
    CHECK(f(bump_peak(3)) == 3);
    CHECK(f(bump_peak(10)) == 10);
    CHECK(f(0) == 0);
    CHECK(f(Rational(1, 5)) == 0);
    CHECK_THROWS_AS(Function::bump_sum(0), DomainError);
  }

  TEST_CASE("function algebra") {
    const auto f = Function::piecewise(PiecewisePoly::polynomial({1, 2}));
    const auto g = Function::constant(3);
    CHECK((f + g)(2) == 8);
    CHECK((f - g)(2) == 2);
    CHECK(f.scaled(Rational(1, 2))(2) == Rational(5, 2));
    CHECK(f.composed_with(PiecewisePoly::abs())(-2) == 3);
    CHECK(sampled_sup_distance(f, g, 0, 1) == 2);
  }

  TEST_CASE("bump function at the anchor") {
    const auto w = build_bump_function(50);
    CHECK(check_point(w, 0, Modulus::identity()).overall == Truth::Yes);
    CHECK(check_point(w, 0, Modulus::power(Rational(1, 2))).overall == Truth::Yes);
    CHECK(sampled_sup_distance(w.f, Function::constant(0), 0, 1) == 50);
    CHECK_THROWS_AS(w.witness(1), DomainError);
  }

  TEST_CASE("a jump is not approximately continuous") {
    PiecewisePoly step;
    step.pieces.push_back({ExtRational(0), ExtRational::pos_inf(), {1}});
    const auto v = check_point_with(Function::piecewise(step), RepresentableSet(RationalIntervalSet::real_line()), 0,
                                    Modulus::identity());
    CHECK(v.overall == Truth::No);
  }

  TEST_CASE("the witness need not contain the point") {
    RepresentableSet w(RationalIntervalSet::real_line());
    w.remove(0);
    const auto v = check_point_with(Function::constant(1), w, 0, Modulus::identity());
    CHECK(v.overall == Truth::Yes);
  }

  TEST_CASE("compositions") {
    const auto w = build_bump_function(20);
    const auto r = compose_continuous(w, PiecewisePoly::polynomial({0, 0, 1}), 0, Modulus::identity());
    CHECK(r.holds);
    CHECK_THROWS_AS(compose_continuous(w, PiecewisePoly::sign(), 0, Modulus::identity()), HypothesisError);
  }

  TEST_CASE("uniform limits") {
    std::vector<Function> seq;
    for (int n = 1; n <= 10; ++n) seq.push_back(Function::bump_sum(10).scaled(Rational(1, n)));
    const auto w = RepresentableSet(ScaleFamily::bump_support()).kernel();
    const auto r = uniform_limit_check(seq, Function::constant(0), 0, RepresentableSet(w), Modulus::identity());
    CHECK(r.holds);
    CHECK(r.three_epsilon_bound);
    CHECK(r.sup_distances.back() == 1);
    CHECK_THROWS_AS(uniform_limit_check({}, Function::constant(0), 0, RepresentableSet(w), Modulus::identity()),
                    DomainError);
  }

  TEST_CASE("combined witnesses") {
    RepresentableSet a(RationalIntervalSet::interval(-1, 1));
    a.remove(Rational(1, 2));
    RepresentableSet b(RationalIntervalSet::interval(0, 2));
    b.add(-5);
    const auto c = combine_witnesses(a, b);
    CHECK(c.contains(Rational(1, 4)));
    CHECK_FALSE(c.contains(Rational(1, 2)));
    CHECK_FALSE(c.contains(-5));
  }
}
