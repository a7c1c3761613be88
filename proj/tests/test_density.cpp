#include "gdensity/density.hpp"

#include <doctest.h>

#include <cmath>

using namespace gdensity;

namespace {

double d(const Real& r) { return r.convert_to<double>(); }

const Target kUnit(RationalIntervalSet::interval(0, 1));

}  // namespace

TEST_SUITE("density") {
  TEST_CASE("grid defaults") {
    const GridSpec g;
    const auto s = g.scales();
    REQUIRE(s.size() == 60);
    CHECK(s.front() == Rational(1, 4));
    CHECK(s.back() == pow2(-61));
    GridSpec bad;
    bad.q = 1;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    Policy p;
    p.window = 1;
    CHECK_THROWS_AS(p.validate(), DomainError);
  }

  TEST_CASE("trivial traces") {
    const auto e = ratio_trace(Modulus::identity(), Target(RationalIntervalSet::empty()), 0, Side::Both);
    for (const auto& r : e.ratios) CHECK(r == 1);
    const auto f = ratio_trace(Modulus::log(), Target(RationalIntervalSet::real_line()), 0, Side::Both);
    for (const auto& r : f.ratios) CHECK(r == 0);
  }

  // gamma(4^-k) / gamma(2^(1-k)) for the log modulus, in closed form once 2^(1-k) <= 1/e
  TEST_CASE("log ratios at the dyadic gap anchor") {
    const auto t = ratio_trace(Modulus::log(), Target(ScaleFamily::dyadic_gap()), 0, Side::Both);
    const double ln2 = std::log(2.0);
    for (std::size_t i = 0; i < t.scales.size(); ++i) {
      const long k = -floor_log2(t.scales[i]);
      if (k < 3) continue;
      const double oracle = (1 + (k - 1) * ln2) / (1 + 2 * k * ln2);
      CHECK(d(t.ratios[i]) == doctest::Approx(oracle).epsilon(1e-13));
    }
    const auto at = [&](long k) { return d(t.ratios[static_cast<std::size_t>(k - 2)]); };
    CHECK(at(51) == doctest::Approx(0.497306).epsilon(1e-6));
    CHECK(at(55) == doctest::Approx(0.497500).epsilon(1e-6));
    CHECK(at(60) == doctest::Approx(0.497705).epsilon(1e-6));
  }

  TEST_CASE("identity ratio at the dyadic gap anchor is at most 2h") {
    const auto b = ScaleFamily::dyadic_gap();
    for (long k = 10; k <= 60; ++k) {
      const Rational h = pow2(-k);
      const Rational m = b.complement_trace_measure(h);
      CHECK(m / (2 * h) <= 2 * h);
      CHECK(h * h / 4 <= m);
    }
  }

  TEST_CASE("outside the validity radius") {
    CHECK_THROWS_AS(ratio_trace(Modulus::identity(), Target(ScaleFamily::dyadic_gap()), 1, Side::Both), DomainError);
    const auto t = ratio_trace(Modulus::identity(), Target(ScaleFamily::bump_support()), 0, Side::Both,
                               GridSpec{Rational(1, 2), Rational(1, 2), 10});
    CHECK(t.truncated);
    CHECK(t.scales.front() == Rational(1, 4));
  }

  TEST_CASE("extrapolation is exact on lines") {
    const std::vector<Real> xs{Real(1), Real(2), Real(3)};
    const std::vector<Real> ys{Real(5), Real(7), Real(9)};
    CHECK(d(extrapolate_to_zero(xs, ys)) == doctest::Approx(3.0));
  }

  TEST_CASE("limit policy") {
    RatioTrace t;
    for (int i = 0; i < 20; ++i) {
      t.scales.push_back(pow2(-i - 2));
      t.ratios.push_back(Real(0));
    }
    const Policy p;
    CHECK(tends_to_zero(estimate_limit(t, p), p) == Truth::Yes);
    for (auto& r : t.ratios) r = Real("0.5");
    CHECK(tends_to_zero(estimate_limit(t, p), p) == Truth::No);
    for (std::size_t i = 0; i < t.ratios.size(); ++i) t.ratios[i] = Real(i % 2 ? 0.4 : 0.6);
    CHECK(tends_to_zero(estimate_limit(t, p), p) == Truth::Unknown);
  }

  TEST_CASE("exact classification on an interval") {
    for (const auto& g : modulus_catalog()) {
      const auto in = classify_point(g, kUnit, Rational(1, 2));
      CHECK(in.cls == PointClass::GammaDensityPoint);
      CHECK(in.exact);
      CHECK(classify_point(g, kUnit, 2).cls == PointClass::GammaDispersionPoint);
      const auto edge = classify_point(g, kUnit, 0);
      CHECK(edge.cls == PointClass::Neither);
      CHECK(edge.density == Truth::No);
      CHECK(edge.dispersion == Truth::No);
    }
  }

  TEST_CASE("one-sided density") {
    CHECK(density_on_side(Modulus::identity(), kUnit, 0, Side::Right) == Truth::Yes);
    CHECK(density_on_side(Modulus::identity(), kUnit, 0, Side::Left) == Truth::No);
  }

  TEST_CASE("anchors") {
    const Target gap(ScaleFamily::dyadic_gap());
    const auto vi = classify_point(Modulus::identity(), gap, 0);
    CHECK(vi.cls == PointClass::GammaDensityPoint);
    CHECK_FALSE(vi.exact);
    const auto vl = classify_point(Modulus::log(), gap, 0);
    CHECK(vl.cls == PointClass::Neither);
    CHECK(vl.limit_estimate == doctest::Approx(0.5).epsilon(0.01));
    for (const auto& p : {Rational(1, 4), Rational(1, 2), Rational(3, 4)})
      CHECK(classify_point(Modulus::power(p), Target(ScaleFamily::bump_support()), 0).cls == PointClass::GammaDensityPoint);
    // the log trace at the bump anchor drifts by more than tol over the window
    CHECK(classify_point(Modulus::log(), Target(ScaleFamily::bump_support()), 0).cls == PointClass::Indeterminate);
  }

  TEST_CASE("one-sided and sequential checks") {
    const auto os = one_sided_equivalence_check(Modulus::log(), kUnit, 0);
    CHECK(os.decided);
    CHECK(os.equivalence_holds);
    CHECK(os.inequalities_hold);
    CHECK(os.right == Truth::Yes);
    CHECK(os.left == Truth::No);
    const auto sc = sequential_criterion_check(Modulus::identity(), kUnit, Rational(1, 3));
    CHECK(sc.agree);
    CHECK(sc.bridge_holds);
    CHECK(sc.sequence_verdict == Truth::Yes);
  }

  TEST_CASE("psi density") {
    PsiDescriptor lin;
    CHECK(classify_psi_point(lin, kUnit, Rational(1, 2)) == Truth::Yes);
    CHECK(classify_psi_point(lin, kUnit, 0) == Truth::No);
  }

  TEST_CASE("names") {
    CHECK(to_string(PointClass::Neither) == "Neither");
    CHECK(side_from_string("left") == Side::Left);
    CHECK_THROWS_AS(side_from_string("up"), ParseError);
  }
}
