#include "gdensity/modulus.hpp"

#include <doctest.h>

#include <cmath>

using namespace gdensity;

namespace {
double d(const Real& r) { return r.convert_to<double>(); }
}  // namespace

TEST_SUITE("modulus") {
  TEST_CASE("evaluation") {
    CHECK(d(Modulus::identity()(Rational(1, 3))) == doctest::Approx(1.0 / 3));
    CHECK(d(Modulus::power(Rational(1, 2))(Rational(1, 4))) == doctest::Approx(0.5));
    CHECK(d(Modulus::bounded()(Rational(1))) == doctest::Approx(0.5));
    // 1 / log(e / t) at t = 1/e is 1/2
    CHECK(d(Modulus::log()(Real(mp::exp(Real(-1))))) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(Modulus::log()(Rational(0)) == 0);
    CHECK_THROWS_AS(Modulus::identity()(Rational(-1)), DomainError);
  }

  TEST_CASE("log modulus deep in the tail") {
    const Real v = Modulus::log()(pow2(-1000));
    const double oracle = 1.0 / (1.0 + 1000.0 * std::log(2.0));
    CHECK(d(v) == doctest::Approx(oracle).epsilon(1e-14));
  }

  TEST_CASE("specs") {
    CHECK(parse_modulus("power:3/4") == Modulus::power(Rational(3, 4)));
    CHECK(parse_modulus("identity") == Modulus::identity());
    CHECK_THROWS_AS(parse_modulus("power:2"), ParseError);
    CHECK_THROWS_AS(parse_modulus("square"), ParseError);
    CHECK(parse_modulus("psi:saturating:1").kind() == ModulusKind::PsiDerived);
    CHECK(modulus_catalog().size() == 6);
  }

  TEST_CASE("catalog satisfies the axioms") {
    for (const auto& g : modulus_catalog()) {
      const auto r = validate_modulus(g);
      CHECK_MESSAGE(r.passed(), g.name());
      CHECK(r.check("subadditive").passed);
    }
  }

  TEST_CASE("psi moduli") {
    PsiDescriptor square;
    square.exponent = 2;
    CHECK_THROWS_AS(from_psi(square), DomainError);
    PsiDescriptor root;
    root.exponent = Rational(1, 2);
    CHECK_FALSE(psi_linear_bounded(root));
    PsiDescriptor lin;
    CHECK(psi_linear_bounded(lin));
    CHECK(from_psi(lin).kind() == ModulusKind::PsiDerived);
  }

  // c^p < eps: the largest grid point 2^-j with c^p < eps
  TEST_CASE("condition (A) certificates") {
    const auto r1 = check_condition_a(Modulus::power(Rational(1, 2)), 0.1);
    REQUIRE(r1.status == ConditionAStatus::Certificate);
    CHECK(r1.certificate->c_epsilon == Rational(1, 128));
    const auto r2 = check_condition_a(Modulus::power(Rational(1, 4)), 0.1);
    REQUIRE(r2.certificate);
    CHECK(r2.certificate->c_epsilon == pow2(-14));
    const auto r3 = check_condition_a(Modulus::identity(), 0.5);
    REQUIRE(r3.certificate);
    CHECK(r3.certificate->c_epsilon == Rational(1, 4));
    CHECK(certified_condition_a(Modulus::bounded()));
    CHECK_THROWS_AS(check_condition_a(Modulus::identity(), 1.5), DomainError);
  }

  TEST_CASE("log modulus is refuted") {
    const auto r = check_condition_a(Modulus::log(), 0.5);
    REQUIRE(r.status == ConditionAStatus::Refutation);
    CHECK(r.refutation->min_ratio_at_finest >= 0.9);
    CHECK(r.refutation->finest_t <= pow2(-100));
    CHECK_FALSE(certified_condition_a(Modulus::log()));
  }

  TEST_CASE("identity over bounded lies in [1, 2]") {
    const auto b = ratio_bound(Modulus::identity(), Modulus::bounded(), 1);
    CHECK(b.uniform);
    CHECK(b.lower >= 1.0);
    CHECK(b.upper <= 2.0);
    CHECK(b.upper == doctest::Approx(2.0).epsilon(1e-5));
  }
}
