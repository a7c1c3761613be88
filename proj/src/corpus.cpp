#include "gdensity/corpus.hpp"

#include <algorithm>
#include <set>

namespace gdensity {

long Rng::uniform(long lo, long hi) {
  if (hi < lo) throw DomainError("empty sampling range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  // rejection sampling keeps the draw unbiased
  const std::uint64_t limit = span == 0 ? 0 : (~std::uint64_t{0} / span) * span;
  std::uint64_t r = engine_();
  while (limit != 0 && r >= limit) r = engine_();
  return lo + static_cast<long>(r % span);
}

RationalIntervalSet random_union(Rng& rng, int max_components) {
  if (rng.chance(1, 20)) return {};
  const int n = static_cast<int>(rng.uniform(1, max_components));
  std::set<long> ends;
  while (static_cast<int>(ends.size()) < 2 * n) ends.insert(rng.uniform(-32, 32));
  std::vector<long> e(ends.begin(), ends.end());
  std::vector<std::pair<Rational, Rational>> raw;
  for (int i = 0; i < n; ++i) raw.emplace_back(Rational(e[2 * i], 8), Rational(e[2 * i + 1], 8));
  return RationalIntervalSet::from_pairs(raw);
}

std::vector<Rational> sample_points(Rng& rng, const RationalIntervalSet& a, const RationalIntervalSet& b, int n) {
  std::vector<Rational> ends = a.finite_endpoints();
  for (const auto& e : b.finite_endpoints()) ends.push_back(e);
  std::vector<Rational> mids;
  for (const auto* s : {&a, &b})
    for (const auto& iv : s->intervals())
      if (iv.bounded()) mids.push_back((iv.lo.value() + iv.hi.value()) / 2);
  std::vector<Rational> out;
  for (int i = 0; i < n; ++i) {
    const long pick = rng.uniform(0, 9);
    if (pick < 4 && !ends.empty()) {
      out.push_back(ends[rng.uniform(0, static_cast<long>(ends.size()) - 1)]);
    } else if (pick < 6 && !mids.empty()) {
      out.push_back(mids[rng.uniform(0, static_cast<long>(mids.size()) - 1)]);
    } else {
      out.emplace_back(rng.uniform(-80, 80), 16);
    }
  }
  return out;
}

Rational random_shift(Rng& rng) {
  const long q = rng.uniform(1, 16);
  return Rational(rng.uniform(-64, 64), q);
}

std::vector<CorpusPair> make_corpus(std::uint64_t seed, int pairs, int points) {
  Rng rng(seed);
  std::vector<CorpusPair> out;
  out.reserve(pairs);
  for (int i = 0; i < pairs; ++i) {
    CorpusPair p;
    p.a = random_union(rng);
    p.b = random_union(rng);
    p.points = sample_points(rng, p.a, p.b, points);
    out.push_back(std::move(p));
  }
  return out;
}

namespace {

Rational small_coefficient(Rng& rng) { return Rational(rng.uniform(-16, 16), 4); }

PiecewisePoly random_pieces(Rng& rng, const Rational& x0) {
  // breakpoints at x0 + k/8, k != 0, so x0 sits inside a piece
  std::set<long> cuts;
  const long count = rng.uniform(0, 3);
  while (static_cast<long>(cuts.size()) < count) {
    const long k = rng.uniform(-16, 16);
    if (k != 0) cuts.insert(k);
  }
  std::vector<ExtRational> bounds{ExtRational::neg_inf()};
  for (long k : cuts) bounds.emplace_back(Rational(x0 + Rational(k, 8)));
  bounds.push_back(ExtRational::pos_inf());
  PiecewisePoly p;
  for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
    std::vector<Rational> poly;
    const long degree = rng.uniform(0, 2);
    for (long d = 0; d <= degree; ++d) poly.push_back(small_coefficient(rng));
    p.pieces.push_back({bounds[i], bounds[i + 1], std::move(poly)});
  }
  return p;
}

}  // namespace

WitnessedFunction random_witnessed_function(Rng& rng, const Rational& x0) {
  Function f = Function::piecewise(random_pieces(rng, x0));
  // the witness contains a neighbourhood of x0, minus a few null points
  const Rational lo = x0 - Rational(rng.uniform(1, 16), 8);
  const Rational hi = x0 + Rational(rng.uniform(1, 16), 8);
  Target kernel = RationalIntervalSet::interval(lo, hi);
  if (rng.chance(1, 2)) {
    const long n_max = rng.uniform(1, 8);
    f = f + Function::bump_sum(n_max, x0).scaled(small_coefficient(rng));
    kernel = Target(ScaleFamily::bump_support(x0)).intersect(kernel);
  }
  if (rng.chance(1, 3)) {
    // extra components away from x0 do not change anything near x0
    const Rational far = hi + Rational(rng.uniform(1, 8), 8);
    kernel = kernel.unite(RationalIntervalSet::interval(far, far + 1));
  }
  RepresentableSet w(kernel);
  if (rng.chance(1, 3)) w.remove(x0 + Rational(rng.uniform(1, 7), 64));
  if (rng.chance(1, 4)) w.remove(x0);
  WitnessedFunction out{f, {}};
  out.witnesses.emplace(x0, std::move(w));
  return out;
}

}  // namespace gdensity
