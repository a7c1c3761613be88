// Seeded random sets, points and functions for the property suites.
#pragma once

#include "gdensity/approx_continuity.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace gdensity {

/// mt19937_64 with its own bounded sampling, so sequences do not depend on the
/// standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [lo, hi].
  long uniform(long lo, long hi);
  /// True with probability num / den.
  bool chance(long num, long den) { return uniform(0, den - 1) < num; }
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// At most max_components open intervals with endpoints k/8 in [-4, 4]; about one in
/// twenty draws is empty.
RationalIntervalSet random_union(Rng& rng, int max_components = 6);
/// Component endpoints, component midpoints and lattice points k/16 in [-5, 5].
std::vector<Rational> sample_points(Rng& rng, const RationalIntervalSet& a, const RationalIntervalSet& b, int n);
/// p / q with q in 1..16 and |p| <= 64.
Rational random_shift(Rng& rng);

struct CorpusPair {
  RationalIntervalSet a;
  RationalIntervalSet b;
  std::vector<Rational> points;
};

std::vector<CorpusPair> make_corpus(std::uint64_t seed, int pairs = 500, int points = 10);

/// A random function that is approximately continuous at x0 with a random witness:
/// piecewise polynomial pieces that avoid x0 as a breakpoint, sometimes plus a scaled
/// bump sum anchored at x0 whose witness avoids the bumps.
WitnessedFunction random_witnessed_function(Rng& rng, const Rational& x0);

}  // namespace gdensity
