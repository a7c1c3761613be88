#include "gdensity/density.hpp"

#include <algorithm>
#include <map>

namespace gdensity {

namespace {

// Ratios below this relative slack are treated as equal when checking inequalities
// that hold exactly in real arithmetic.
Real slack(const Real& v) {
  thread_local unsigned digits = 0;
  thread_local Real rel, floor;
  if (digits != real_digits()) {
    rel = Real("1e-40");
    floor = Real("1e-300");
    digits = real_digits();
  }
  return mp::abs(v) * rel + floor;
}

Rational window_length(const Rational& alpha, Side side) { return side == Side::Both ? 2 * alpha : alpha; }

Real ratio_of(const Modulus& g, const Rational& m, const Rational& alpha, Side side) {
  return g(m) / g(window_length(alpha, side));
}

int complement_sides(const LocalSides& s, Side side) {
  switch (side) {
    case Side::Left: return s.left_in ? 0 : 1;
    case Side::Right: return s.right_in ? 0 : 1;
    case Side::Both: break;
  }
  return (s.left_in ? 0 : 1) + (s.right_in ? 0 : 1);
}

// Limit of gamma(c alpha) / gamma(w alpha) estimated on the grid's deepest scales, where
// c is the number of window halves that miss the set and w the number of halves in the window.
double synthetic_limit(const Modulus& g, int c, int w, const GridSpec& grid, const Policy& policy) {
  if (c == 0) return 0;
  if (c == w) return 1;
  // the value depends only on these inputs; suites ask for it many times
  thread_local std::map<std::string, double> cache;
  const std::string key = g.name() + '|' + std::to_string(c) + '|' + std::to_string(w) + '|' + to_string(grid.alpha0) +
                          '|' + to_string(grid.q) + '|' + std::to_string(grid.K) + '|' +
                          std::to_string(policy.window) + '|' + std::to_string(real_digits());
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  RatioTrace t;
  const auto scales = grid.scales();
  const std::size_t from = scales.size() - std::min<std::size_t>(scales.size(), policy.window);
  for (std::size_t k = from; k < scales.size(); ++k) {
    t.scales.push_back(scales[k]);
    t.measures.push_back(c * scales[k]);
    t.ratios.push_back(g(Rational(c * scales[k])) / g(Rational(w * scales[k])));
  }
  const double v = estimate_limit(t, policy).estimate;
  cache.emplace(key, v);
  return v;
}

// A trace whose last W measures are exactly c * alpha for one integer c; the local structure
// then forces the limit (0 for c = 0, positive otherwise by subadditivity).
std::optional<Rational> linear_tail(const RatioTrace& t, int window) {
  if (t.scales.size() < static_cast<std::size_t>(window)) return std::nullopt;
  std::optional<Rational> c;
  for (std::size_t k = t.scales.size() - window; k < t.scales.size(); ++k) {
    const Rational ck = t.measures[k] / t.scales[k];
    if (c && *c != ck) return std::nullopt;
    c = ck;
  }
  return c;
}

}  // namespace

void GridSpec::validate() const {
  if (alpha0 <= 0) throw DomainError("grid alpha0 must be positive");
  if (q <= 0 || q >= 1) throw DomainError("grid ratio q must lie in (0, 1)");
  if (K < 8) throw DomainError("grid needs at least 8 scales");
}

std::vector<Rational> GridSpec::scales() const {
  validate();
  std::vector<Rational> out;
  out.reserve(K);
  Rational a = alpha0;
  for (long k = 0; k < K; ++k) {
    out.push_back(a);
    a *= q;
  }
  return out;
}

void Policy::validate() const {
  if (window < 2) throw DomainError("stabilization window must be at least 2");
  if (!(tol > 0) || !(theta > 0) || !(theta_limsup > 0)) throw DomainError("policy thresholds must be positive");
}

RatioTrace ratio_trace_on(const Modulus& g, const Target& target, const Rational& x, Side side,
                          const std::vector<Rational>& scales, Measured measured) {
  RatioTrace t;
  t.side = side;
  t.measured = measured;
  std::optional<Rational> radius;
  if (auto anchor = target.anchor()) {
    radius = *target.validity_radius();
    if (abs(Rational(x - *anchor)) >= *radius) throw DomainError("point outside the family's validity region");
    if (x != *anchor) radius.reset();
  }
  for (std::size_t k = 0; k < scales.size(); ++k) {
    const Rational& a = scales[k];
    if (a <= 0 || (k > 0 && a >= scales[k - 1])) throw DomainError("scales must be positive and strictly decreasing");
    if (radius && a > *radius) {
      t.truncated = true;
      continue;
    }
    const Rational inside = target.trace(x, a, side);
    Rational m = measured == Measured::Set ? inside : Rational(window_length(a, side) - inside);
    t.ratios.push_back(ratio_of(g, m, a, side));
    t.scales.push_back(a);
    t.measures.push_back(std::move(m));
  }
  return t;
}

RatioTrace ratio_trace(const Modulus& g, const Target& target, const Rational& x, Side side,
                       const GridSpec& grid, Measured measured) {
  return ratio_trace_on(g, target, x, side, grid.scales(), measured);
}

Real extrapolate_to_zero(const std::vector<Real>& xs, const std::vector<Real>& ys) {
  if (xs.empty() || xs.size() != ys.size()) throw DomainError("extrapolation needs matching nonempty samples");
  std::vector<Real> p = ys;
  const std::size_t n = xs.size();
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = 0; i + level < n; ++i) {
      const Real& xi = xs[i];
      const Real& xj = xs[i + level];
      if (xi == xj) throw DomainError("extrapolation abscissae must be distinct");
      p[i] = (xj * p[i] - xi * p[i + 1]) / (xj - xi);
    }
  }
  return p[0];
}

LimitEstimate estimate_limit(const RatioTrace& trace, const Policy& policy) {
  LimitEstimate e;
  const std::size_t n = trace.ratios.size();
  if (n == 0) return e;
  e.last = static_cast<double>(trace.ratios.back());
  e.estimate = std::max(0.0, e.last);
  if (n < static_cast<std::size_t>(policy.window)) return e;
  const std::size_t from = n - policy.window;
  const auto [lo, hi] = std::minmax_element(trace.ratios.begin() + from, trace.ratios.end());
  e.spread = static_cast<double>(*hi - *lo);
  e.stable = e.spread < policy.tol;
  // Linear extrapolation in 1/log(1/alpha) between the ends of the window; higher
  // orders amplify geometrically small ratios into noise.
  std::vector<Real> xs, ys;
  for (std::size_t k : {from, n - 1}) {
    const Real lg = -mp::log(to_real(trace.scales[k]));
    if (lg <= 0) return e;
    xs.push_back(Real(1) / lg);
    ys.push_back(trace.ratios[k]);
  }
  e.estimate = std::max(0.0, static_cast<double>(extrapolate_to_zero(xs, ys)));
  return e;
}

Truth tends_to_zero(const LimitEstimate& e, const Policy& policy) {
  if (!e.stable) return Truth::Unknown;
  if (e.last < policy.theta) return Truth::Yes;
  if (e.estimate >= policy.theta) return Truth::No;
  return Truth::Unknown;
}

Truth density_on_side(const Modulus& g, const Target& target, const Rational& x, Side side,
                      const GridSpec& grid, const Policy& policy) {
  grid.validate();
  policy.validate();
  if (auto sides = target.local_sides(x)) return complement_sides(*sides, side) == 0 ? Truth::Yes : Truth::No;
  return tends_to_zero(estimate_limit(ratio_trace(g, target, x, side, grid), policy), policy);
}

Verdict classify_point(const Modulus& g, const Target& target, const Rational& x, const GridSpec& grid,
                       const Policy& policy) {
  grid.validate();
  policy.validate();
  Verdict v;
  v.stabilization_window = policy.window;
  v.tolerance = policy.tol;
  v.theta = policy.theta;
  if (auto sides = target.local_sides(x)) {
    const int out = complement_sides(*sides, Side::Both);
    v.exact = true;
    v.density = out == 0 ? Truth::Yes : Truth::No;
    v.dispersion = out == 2 ? Truth::Yes : Truth::No;
    v.limit_estimate = synthetic_limit(g, out, 2, grid, policy);
    v.set_limit_estimate = synthetic_limit(g, 2 - out, 2, grid, policy);
  } else {
    const auto comp = ratio_trace(g, target, x, Side::Both, grid, Measured::Complement);
    // dispersion is density of the complement, traced on the complement representation
    const auto set = ratio_trace(g, target.complement(), x, Side::Both, grid, Measured::Complement);
    const auto ec = estimate_limit(comp, policy);
    const auto es = estimate_limit(set, policy);
    v.density = tends_to_zero(ec, policy);
    v.dispersion = tends_to_zero(es, policy);
    v.limit_estimate = ec.estimate;
    v.set_limit_estimate = es.estimate;
    v.truncated = comp.truncated || set.truncated;
  }
  if (v.density == Truth::Yes) v.cls = PointClass::GammaDensityPoint;
  else if (v.dispersion == Truth::Yes) v.cls = PointClass::GammaDispersionPoint;
  else if (v.density == Truth::No && v.dispersion == Truth::No) v.cls = PointClass::Neither;
  return v;
}

std::vector<Verdict> density_points_on_grid(const Modulus& g, const RationalIntervalSet& a,
                                            const std::vector<Rational>& sample, const GridSpec& grid,
                                            const Policy& policy) {
  std::vector<Verdict> out;
  out.reserve(sample.size());
  const Target t(a);
  for (const auto& x : sample) out.push_back(classify_point(g, t, x, grid, policy));
  return out;
}

OneSidedReport one_sided_equivalence_check(const Modulus& g, const Target& target, const Rational& x,
                                           const GridSpec& grid, const Policy& policy) {
  OneSidedReport r;
  r.left = density_on_side(g, target, x, Side::Left, grid, policy);
  r.right = density_on_side(g, target, x, Side::Right, grid, policy);
  r.both = density_on_side(g, target, x, Side::Both, grid, policy);
  r.decided = r.left != Truth::Unknown && r.right != Truth::Unknown && r.both != Truth::Unknown;
  r.equivalence_holds = !r.decided || ((r.both == Truth::Yes) == (r.left == Truth::Yes && r.right == Truth::Yes));
  if (!r.equivalence_holds) r.failure = "two-sided verdict differs from the conjunction of one-sided verdicts";

  const auto left = ratio_trace(g, target, x, Side::Left, grid);
  const auto right = ratio_trace(g, target, x, Side::Right, grid);
  const auto both = ratio_trace(g, target, x, Side::Both, grid);
  r.inequalities_hold = true;
  for (std::size_t k = 0; k < both.scales.size(); ++k) {
    const Rational& a = both.scales[k];
    const Real gl = g(left.measures[k]);
    const Real gr = g(right.measures[k]);
    const Real gb = g(both.measures[k]);
    const Real g1 = g(a);
    const Real g2 = g(Rational(2 * a));
    bool ok = gl <= gb + slack(gb) && gr <= gb + slack(gb);
    ok = ok && Real(1) / g1 <= Real(2) / g2 + slack(Real(2) / g2);
    // ratio_left <= 2 ratio_both, and ratio_both <= ratio_left + ratio_right by subadditivity
    ok = ok && left.ratios[k] <= 2 * both.ratios[k] + slack(both.ratios[k]);
    ok = ok && both.ratios[k] <= left.ratios[k] + right.ratios[k] + slack(both.ratios[k]);
    ++r.checked_scales;
    if (!ok) {
      r.inequalities_hold = false;
      if (r.failure.empty()) r.failure = "bounding inequality fails at alpha = " + to_string(a);
    }
  }
  return r;
}

SequentialReport sequential_criterion_check(const Modulus& g, const Target& target, const Rational& x,
                                            const GridSpec& grid, const Policy& policy) {
  SequentialReport r;
  r.grid_verdict = classify_point(g, target, x, grid, policy).density;

  std::vector<Rational> at_n, at_next;
  std::vector<Integer> ns;
  for (const auto& a : grid.scales()) {
    const Rational inv = 1 / a;
    const Integer n = numerator(inv) / denominator(inv);
    if (n < 1) continue;
    ns.push_back(n);
    at_n.emplace_back(Integer(1), n);
    at_next.emplace_back(Integer(1), Integer(n + 1));
  }
  // keep strictly decreasing scales only (coarse grids may repeat n)
  std::vector<Rational> seq;
  for (const auto& s : at_next)
    if (seq.empty() || s < seq.back()) seq.push_back(s);
  const auto seq_trace = ratio_trace_on(g, target, x, Side::Both, seq);

  if (auto c = linear_tail(seq_trace, policy.window)) {
    r.sequence_verdict = *c == 0 ? Truth::Yes : Truth::No;
  } else {
    r.sequence_verdict = tends_to_zero(estimate_limit(seq_trace, policy), policy);
  }
  r.agree = r.grid_verdict == r.sequence_verdict;
  if (!r.agree) r.failure = "grid verdict " + to_string(r.grid_verdict) + " vs sequence verdict " + to_string(r.sequence_verdict);

  r.bridge_holds = true;
  const auto scales = grid.scales();
  std::size_t j = 0;
  for (const auto& a : scales) {
    const Rational inv = 1 / a;
    if (numerator(inv) / denominator(inv) < 1) continue;
    const Rational& one_over_n = at_n[j];
    const Integer& n = ns[j];
    ++j;
    const auto ra = ratio_trace_on(g, target, x, Side::Both, {a});
    const auto rn = ratio_trace_on(g, target, x, Side::Both, {one_over_n});
    if (ra.ratios.empty() || rn.ratios.empty()) continue;
    const Real lhs = g(Rational(Integer(2), n));
    const Real rhs = 2 * g(Rational(Integer(2), Integer(n + 1)));
    bool ok = lhs <= rhs + slack(rhs);
    ok = ok && ra.ratios[0] <= 2 * rn.ratios[0] + slack(rn.ratios[0]);
    ++r.checked_scales;
    if (!ok) {
      r.bridge_holds = false;
      if (r.failure.empty()) r.failure = "bridging inequality fails at alpha = " + to_string(a);
    }
  }
  return r;
}

RatioTrace psi_ratio_trace(const PsiDescriptor& psi, const Target& target, const Rational& x,
                           const GridSpec& grid) {
  RatioTrace t;
  t.side = Side::Both;
  t.measured = Measured::Complement;
  for (const auto& a : grid.scales()) {
    const Rational m = 2 * a - target.trace(x, a, Side::Both);
    const Real w = to_real(Rational(2 * a));
    t.ratios.push_back(to_real(m) / (w * eval_psi(psi, w)));
    t.scales.push_back(a);
    t.measures.push_back(m);
  }
  return t;
}

Truth classify_psi_point(const PsiDescriptor& psi, const Target& target, const Rational& x,
                         const GridSpec& grid, const Policy& policy) {
  grid.validate();
  policy.validate();
  // a missing half contributes alpha / (2 alpha psi(2 alpha)), which blows up as psi(0+) = 0
  if (auto sides = target.local_sides(x)) return complement_sides(*sides, Side::Both) == 0 ? Truth::Yes : Truth::No;
  return tends_to_zero(estimate_limit(psi_ratio_trace(psi, target, x, grid), policy), policy);
}

std::string to_string(PointClass c) {
  switch (c) {
    case PointClass::GammaDensityPoint: return "GammaDensityPoint";
    case PointClass::GammaDispersionPoint: return "GammaDispersionPoint";
    case PointClass::Neither: return "Neither";
    case PointClass::Indeterminate: return "Indeterminate";
  }
  return "Indeterminate";
}

std::string to_string(Truth t) {
  switch (t) {
    case Truth::Yes: return "yes";
    case Truth::No: return "no";
    case Truth::Unknown: return "unknown";
  }
  return "unknown";
}

std::string to_string(Side s) {
  switch (s) {
    case Side::Left: return "left";
    case Side::Right: return "right";
    case Side::Both: return "both";
  }
  return "both";
}

Side side_from_string(std::string_view s) {
  if (s == "left") return Side::Left;
  if (s == "right") return Side::Right;
  if (s == "both") return Side::Both;
  throw ParseError("unknown side '" + std::string(s) + "'");
}

}  // namespace gdensity
