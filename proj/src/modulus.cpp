#include "gdensity/modulus.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>

namespace gdensity {

namespace {

struct EConstants {
  unsigned digits = 0;
  Real e, inv_e;
};

const EConstants& e_constants() {
  thread_local EConstants c;
  if (c.digits != real_digits()) {
    c.e = mp::exp(Real(1));
    c.inv_e = Real(1) / c.e;
    c.digits = real_digits();
  }
  return c;
}

Real log_modulus(const Real& t, const Rational& coef) {
  if (t == 0) return Real(0);
  const auto& c = e_constants();
  if (t <= c.inv_e) return to_real(coef) / (Real(1) - mp::log(t));
  return to_real(coef) * (c.e / 4 * t + Real(1) / 4);
}

// Evaluations at rational points repeat heavily across traces (c * alpha for small c).
struct CacheKey {
  int kind;
  int shape;
  Rational exponent;
  Rational coefficient;
  Rational t;

  friend bool operator<(const CacheKey& a, const CacheKey& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.shape != b.shape) return a.shape < b.shape;
    if (a.exponent != b.exponent) return a.exponent < b.exponent;
    if (a.coefficient != b.coefficient) return a.coefficient < b.coefficient;
    return a.t < b.t;
  }
};

struct EvalCache {
  unsigned digits = 0;
  std::map<CacheKey, Real> values;
};

EvalCache& eval_cache() {
  thread_local EvalCache c;
  if (c.digits != real_digits() || c.values.size() > 200000) {
    c.values.clear();
    c.digits = real_digits();
  }
  return c;
}

std::string fmt(const Real& v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

}  // namespace

Modulus Modulus::identity() { return Modulus(ModulusKind::Identity, 1); }

Modulus Modulus::power(const Rational& p) {
  if (p <= 0 || p >= 1) throw DomainError("power modulus needs 0 < p < 1");
  return Modulus(ModulusKind::Power, p);
}

Modulus Modulus::bounded() { return Modulus(ModulusKind::Bounded, 1); }

Modulus Modulus::log() { return Modulus(ModulusKind::Log, 1); }

Modulus Modulus::psi_unchecked(const PsiDescriptor& psi) {
  Modulus m(ModulusKind::PsiDerived, psi.exponent);
  m.psi_ = psi;
  return m;
}

bool operator==(const Modulus& a, const Modulus& b) { return a.name() == b.name(); }

std::string Modulus::name() const {
  switch (kind_) {
    case ModulusKind::Identity: return "identity";
    case ModulusKind::Power: return "power:" + to_string(exponent_);
    case ModulusKind::Bounded: return "bounded";
    case ModulusKind::Log: return "log";
    case ModulusKind::PsiDerived: break;
  }
  const auto& p = *psi_;
  switch (p.shape) {
    case PsiShape::Power: return "psi:power:" + to_string(p.coefficient) + ":" + to_string(p.exponent);
    case PsiShape::Saturating: return "psi:saturating:" + to_string(p.coefficient);
    case PsiShape::Log: return "psi:log:" + to_string(p.coefficient);
  }
  return "psi";
}

Real eval_psi(const PsiDescriptor& psi, const Real& t) {
  ensure_real_precision();
  if (t == 0) return Real(0);
  switch (psi.shape) {
    case PsiShape::Power:
      if (psi.exponent == 1) return to_real(psi.coefficient) * t;
      return to_real(psi.coefficient) * mp::exp(to_real(psi.exponent) * mp::log(t));
    case PsiShape::Saturating: return to_real(psi.coefficient) * t / (Real(1) + t);
    case PsiShape::Log: return log_modulus(t, psi.coefficient);
  }
  return Real(0);
}

Real Modulus::operator()(const Real& t) const {
  ensure_real_precision();
  if (t < 0) throw DomainError("modulus evaluated at a negative argument");
  if (t == 0) return Real(0);
  switch (kind_) {
    case ModulusKind::Identity: return t;
    case ModulusKind::Power: return mp::exp(to_real(exponent_) * mp::log(t));
    case ModulusKind::Bounded: return t / (Real(1) + t);
    case ModulusKind::Log: return log_modulus(t, 1);
    case ModulusKind::PsiDerived: return eval_psi(*psi_, t);
  }
  return Real(0);
}

Real Modulus::operator()(const Rational& t) const {
  if (t < 0) throw DomainError("modulus evaluated at a negative argument");
  if (t == 0) return Real(0);
  if (kind_ == ModulusKind::Identity) return to_real(t);
  ensure_real_precision();
  auto& cache = eval_cache();
  CacheKey key{static_cast<int>(kind_), psi_ ? static_cast<int>(psi_->shape) : -1, exponent_,
               psi_ ? psi_->coefficient : Rational(0), t};
  if (auto it = cache.values.find(key); it != cache.values.end()) return it->second;
  Real v = evaluate(t);
  cache.values.emplace(std::move(key), v);
  return v;
}

Real Modulus::evaluate(const Rational& t) const {
  if (kind_ == ModulusKind::Log) {
    // log-space evaluation: log t = log(num) - log(den)
    ensure_real_precision();
    const Real log_t = mp::log(Real(numerator(t))) - mp::log(Real(denominator(t)));
    if (log_t <= Real(-1)) return Real(1) / (Real(1) - log_t);
  }
  return (*this)(to_real(t));
}

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

Modulus parse_modulus(std::string_view spec) {
  const auto parts = split(spec, ':');
  const auto& head = parts[0];
  if (parts.size() == 1) {
    if (head == "identity" || head == "id") return Modulus::identity();
    if (head == "bounded") return Modulus::bounded();
    if (head == "log") return Modulus::log();
  }
  if (head == "power" && parts.size() == 2) {
    const Rational p = parse_rational(parts[1]);
    if (p <= 0 || p >= 1) throw ParseError("power exponent must lie in (0,1)");
    return Modulus::power(p);
  }
  if (head == "psi" && parts.size() >= 2) {
    PsiDescriptor d;
    if (parts[1] == "power" && parts.size() == 4) {
      d.shape = PsiShape::Power;
      d.coefficient = parse_rational(parts[2]);
      d.exponent = parse_rational(parts[3]);
    } else if (parts[1] == "saturating" && parts.size() == 3) {
      d.shape = PsiShape::Saturating;
      d.coefficient = parse_rational(parts[2]);
    } else if (parts[1] == "log" && parts.size() == 3) {
      d.shape = PsiShape::Log;
      d.coefficient = parse_rational(parts[2]);
    } else {
      throw ParseError("bad psi spec '" + std::string(spec) + "'");
    }
    return from_psi(d);
  }
  throw ParseError("unknown modulus '" + std::string(spec) + "'");
}

std::vector<Modulus> modulus_catalog() {
  return {Modulus::identity(), Modulus::power(Rational(1, 4)), Modulus::power(Rational(1, 2)),
          Modulus::power(Rational(3, 4)), Modulus::bounded(), Modulus::log()};
}

// ---------------------------------------------------------------- grids

std::vector<Rational> GeometricGrid::points() const {
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(std::max(0L, count)));
  Rational t = start;
  for (long i = 0; i < count; ++i) {
    out.push_back(t);
    t *= ratio;
  }
  return out;
}

GeometricGrid GeometricGrid::dyadic(long k_from, long k_to) {
  return {pow2(-k_from), Rational(1, 2), k_to - k_from + 1};
}

GeometricGrid default_validation_grid() { return {Rational(4), Rational(1, 2), 103}; }

// ---------------------------------------------------------------- validation

bool ValidationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; });
}

const AxiomCheck& ValidationReport::check(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw std::out_of_range("no axiom check named " + std::string(name));
}

ValidationReport validate_modulus(const Modulus& g, const GeometricGrid& grid, double tol) {
  ensure_real_precision();
  ValidationReport report;
  auto pts = grid.points();
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<Real> vals;
  vals.reserve(pts.size());
  for (const auto& t : pts) vals.push_back(g(t));
  const Real one_plus_tol = Real(1) + Real(tol);

  AxiomCheck zero{"zero_iff_zero", true, 0, {}};
  if (g(Rational(0)) != 0) {
    zero.passed = false;
    zero.witness = "t=0";
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!(vals[i] > 0)) {
      zero.passed = false;
      zero.witness = "t=" + to_string(pts[i]);
      break;
    }
  }
  report.checks.push_back(zero);

  AxiomCheck sub{"subadditive", true, 0, {}};
  Real worst = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i; j < pts.size(); ++j) {
      const Real lhs = g(Rational(pts[i] + pts[j]));
      const Real rhs = vals[i] + vals[j];
      const Real excess = lhs / rhs;
      if (excess > worst) {
        worst = excess;
        sub.witness = "a=" + to_string(pts[i]) + " b=" + to_string(pts[j]) + " ratio=" + fmt(excess);
      }
    }
  }
  sub.worst = static_cast<double>(worst - 1);
  sub.passed = worst <= one_plus_tol;
  report.checks.push_back(sub);

  AxiomCheck diff{"difference_bound", true, 0, {}};  // gamma(a) - gamma(b) <= gamma(a - b), a >= b
  Real worst_diff = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const Real rhs = vals[j] + g(Rational(pts[i] - pts[j]));
      const Real excess = vals[i] / rhs;
      if (excess > worst_diff) {
        worst_diff = excess;
        diff.witness = "a=" + to_string(pts[i]) + " b=" + to_string(pts[j]);
      }
    }
  }
  diff.worst = static_cast<double>(worst_diff - 1);
  diff.passed = worst_diff <= one_plus_tol;
  report.checks.push_back(diff);

  AxiomCheck mono{"nondecreasing", true, 0, {}};
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (!(vals[i - 1] < vals[i])) report.strictly_increasing = false;
    if (vals[i - 1] > vals[i] * one_plus_tol) {
      report.weakly_increasing = false;
      mono.passed = false;
      mono.witness = "t=" + to_string(pts[i - 1]) + " s=" + to_string(pts[i]);
    }
  }
  report.checks.push_back(mono);

  // gamma(2^-(4^j)) must decrease to below 1e-6
  AxiomCheck rc{"right_continuous_at_zero", true, 0, {}};
  Real prev = g(Real(1) / 2);
  long exponent = 1;
  for (int j = 1; j <= 12; ++j) {
    exponent *= 4;
    const Real v = g(mp::ldexp(Real(1), -exponent));
    if (!(v < prev)) {
      rc.passed = false;
      rc.witness = "not decreasing at t=2^-" + std::to_string(exponent);
    }
    prev = v;
  }
  rc.worst = static_cast<double>(prev);
  if (prev >= Real(1e-6)) {
    rc.passed = false;
    rc.witness = "gamma(2^-" + std::to_string(exponent) + ")=" + fmt(prev);
  }
  report.checks.push_back(rc);
  return report;
}

// ---------------------------------------------------------------- condition (A)

ConditionAGrid ConditionAGrid::defaults() {
  ConditionAGrid grid;
  for (long j = 1; j <= 40; ++j) grid.c_grid.push_back(pow2(-j));
  for (long k = 10; k <= 1000; ++k) grid.t_grid.push_back(pow2(-k));
  grid.description = "c=2^-1..2^-40; t=2^-10..2^-1000";
  return grid;
}

ConditionAResult check_condition_a(const Modulus& g, double epsilon, const ConditionAGrid& grid) {
  if (!(epsilon > 0 && epsilon < 1)) throw DomainError("epsilon must lie in (0,1)");
  if (grid.c_grid.empty() || grid.t_grid.size() < 2) throw DomainError("degenerate Condition (A) grid");
  auto ts = grid.t_grid;
  std::sort(ts.begin(), ts.end(), [](const Rational& a, const Rational& b) { return a > b; });
  auto cs = grid.c_grid;
  std::sort(cs.begin(), cs.end(), [](const Rational& a, const Rational& b) { return a > b; });
  if (ts.back() <= 0 || ts.back() > pow2(-60)) throw DomainError("t grid must reach 2^-60");
  for (const auto& c : cs)
    if (c <= 0 || c >= 1) throw DomainError("c grid must lie in (0,1)");

  ConditionAResult result;
  result.grid_description = grid.description.empty() ? "custom" : grid.description;
  std::vector<Real> gt;
  gt.reserve(ts.size());
  for (const auto& t : ts) gt.push_back(g(t));
  const Real eps(epsilon);
  const std::size_t half = ts.size() / 2;

  RefutationEvidence evidence;
  evidence.epsilon = epsilon;
  evidence.finest_t = ts.back();
  evidence.min_ratio_at_finest = 1e300;
  bool all_exceed = true;

  for (const auto& c : cs) {
    std::vector<Real> ratios(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) ratios[i] = g(Rational(c * ts[i])) / gt[i];
    // the run of passing ratios starting from the finest t
    std::size_t run = 0;
    for (std::size_t i = ts.size(); i-- > 0;) {
      if (ratios[i] < eps) ++run;
      else break;
    }
    if (run >= ts.size() - half) {
      ConditionACertificate cert;
      cert.epsilon = epsilon;
      cert.c_epsilon = c;
      cert.delta_epsilon = ts[ts.size() - run];
      Real mx = 0;
      for (std::size_t i = ts.size() - run; i < ts.size(); ++i) mx = std::max(mx, ratios[i]);
      cert.max_observed_ratio = static_cast<double>(mx);
      result.status = ConditionAStatus::Certificate;
      result.certificate = cert;
      return result;
    }
    CandidateEvidence ce;
    ce.c = c;
    ce.ratio_at_finest = static_cast<double>(ratios.back());
    Real floor = ratios.back();
    for (std::size_t i = half; i < ts.size(); ++i) floor = std::min(floor, ratios[i]);
    ce.floor = static_cast<double>(floor);
    if (!(ratios.back() >= eps)) all_exceed = false;
    evidence.min_ratio_at_finest = std::min(evidence.min_ratio_at_finest, ce.ratio_at_finest);
    evidence.candidates.push_back(ce);
  }
  if (all_exceed) result.status = ConditionAStatus::Refutation;
  result.refutation = evidence;
  return result;
}

bool certified_condition_a(const Modulus& g) {
  for (double eps : {0.5, 0.1, 0.01})
    if (check_condition_a(g, eps).status != ConditionAStatus::Certificate) return false;
  return true;
}

// ---------------------------------------------------------------- ratio bounds

std::vector<Rational> default_ratio_grid(const Rational& delta) {
  std::vector<Rational> out;
  for (long j = 1; j <= 20; ++j) out.push_back(delta * (1 - pow2(-j)));
  for (long k = 1; k <= 200; ++k) out.push_back(delta * pow2(-k));
  return out;
}

RatioBound ratio_bound(const Modulus& g1, const Modulus& g2, const Rational& delta, std::vector<Rational> t_grid) {
  if (t_grid.empty()) t_grid = default_ratio_grid(delta);
  std::sort(t_grid.begin(), t_grid.end(), [](const Rational& a, const Rational& b) { return a > b; });
  for (const auto& t : t_grid)
    if (t <= 0 || t >= delta) throw DomainError("ratio grid must lie in (0, delta)");
  RatioBound rb;
  Real lo = 0, hi = 0, lo_coarse = 0, hi_coarse = 0;
  const std::size_t coarse = (t_grid.size() * 3) / 4;
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    const Real den = g2(t_grid[i]);
    if (den == 0) throw DomainError("second modulus vanishes at t=" + to_string(t_grid[i]));
    const Real r = g1(t_grid[i]) / den;
    if (i == 0 || r < lo) lo = r;
    if (i == 0 || r > hi) hi = r;
    if (i + 1 == coarse) {
      lo_coarse = lo;
      hi_coarse = hi;
    }
  }
  rb.lower = static_cast<double>(lo);
  rb.upper = static_cast<double>(hi);
  rb.uniform = lo > 0 && lo * 2 >= lo_coarse && hi <= hi_coarse * 2;
  return rb;
}

// ---------------------------------------------------------------- psi adaptor

Modulus from_psi(const PsiDescriptor& psi) {
  if (!(psi.continuous && psi.nondecreasing && psi.vanishes_at_zero))
    throw DomainError("psi must be continuous, nondecreasing and vanish at 0+");
  if (!psi.subadditive) throw DomainError("psi must be declared subadditive");
  if (psi.coefficient <= 0) throw DomainError("psi coefficient must be positive");
  Modulus m = Modulus::psi_unchecked(psi);
  const auto report = validate_modulus(m);
  const auto& sub = report.check("subadditive");
  if (!sub.passed) throw DomainError("psi fails sampled subadditivity: " + sub.witness);
  if (!report.passed()) {
    for (const auto& c : report.checks)
      if (!c.passed) throw DomainError("psi fails " + c.name + ": " + c.witness);
  }
  return m;
}

bool psi_linear_bounded(const PsiDescriptor& psi) {
  ensure_real_precision();
  const Real mid = mp::ldexp(Real(1), -100);
  const Real deep = mp::ldexp(Real(1), -200);
  const Real r_mid = eval_psi(psi, mid) / mid;
  const Real r_deep = eval_psi(psi, deep) / deep;
  return r_deep <= 2 * r_mid;
}

}  // namespace gdensity
