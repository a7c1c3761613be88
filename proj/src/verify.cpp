#include "gdensity/verify.hpp"

#include "gdensity/corpus.hpp"

#include <deque>
#include <functional>
#include <map>

namespace gdensity {

void PropertyResult::check(bool ok, const std::string& what) {
  check_lazy(ok, [&] { return what; });
}

bool VerifyReport::passed() const {
  return std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) { return p.passed(); });
}

const PropertyResult* VerifyReport::find(const std::string& name) const {
  for (const auto& p : properties)
    if (p.name == name) return &p;
  return nullptr;
}

Json VerifyReport::json() const {
  Json props = Json::array();
  for (const auto& p : properties)
    props.push_back({{"suite", p.suite},
                     {"name", p.name},
                     {"checked", p.checked},
                     {"failures", p.failures},
                     {"passed", p.passed()},
                     {"first_failure", p.first_failure}});
  return {{"schema", "gdensity.verify/1"},
          {"suite", suite},
          {"seed", seed},
          {"grid", grid_json(grid)},
          {"policy", policy_json(policy)},
          {"options",
           {{"pairs", options.pairs},
            {"points", options.points},
            {"translations", options.translations},
            {"function_pairs", options.function_pairs}}},
          {"properties", props},
          {"passed", passed()}};
}

namespace {

struct Ctx {
  std::uint64_t seed;
  GridSpec grid;
  Policy policy;
  VerifyOptions options;
  std::string suite;
  std::deque<PropertyResult> props;  // references stay valid as properties are added

  PropertyResult& prop(const std::string& name) {
    for (auto& p : props)
      if (p.name == name) return p;
    props.push_back({suite, name, 0, 0, {}});
    return props.back();
  }
};

std::string at(const Rational& x) { return "x = " + to_string(x); }

std::string describe(const RationalIntervalSet& s) { return set_json(s).dump(); }

const Modulus& identity_modulus() {
  static const Modulus id = Modulus::identity();
  return id;
}

std::vector<Modulus> certified_moduli() {
  return {Modulus::power(Rational(1, 4)), Modulus::power(Rational(1, 2)), Modulus::power(Rational(3, 4)),
          Modulus::bounded()};
}

std::vector<PsiDescriptor> linear_bounded_psis() {
  PsiDescriptor linear;  // psi(t) = t
  PsiDescriptor saturating;
  saturating.shape = PsiShape::Saturating;
  return {linear, saturating};
}

// ---------------------------------------------------------------- interval

void suite_interval(Ctx& c) {
  const auto corpus = make_corpus(c.seed, c.options.pairs, c.options.points);
  Rng rng(c.seed ^ 0x1f1f1f1fULL);
  auto& inv = c.prop("complement_involution");
  auto& dm = c.prop("de_morgan");
  auto& ie = c.prop("inclusion_exclusion");
  auto& sd = c.prop("symmetric_difference_measure");
  auto& diff = c.prop("difference_measure");
  auto& tr = c.prop("trace_additivity");
  auto& sh = c.prop("translation_invariance");
  const std::vector<Rational> radii{Rational(1, 8), Rational(1, 3), Rational(2)};
  for (const auto& p : corpus) {
    const auto &a = p.a, &b = p.b;
    inv.check_lazy(a.complement().complement() == a, [&] { return describe(a); });
    dm.check_lazy(a.unite(b).complement() == a.complement().intersect(b.complement()), [&] { return describe(a); });
    const Rational lo = -5, hi = 5;
    dm.check_lazy(a.intersect(b).complement().measure_within(lo, hi) ==
                      a.complement().unite(b.complement()).measure_within(lo, hi),
                  [&] { return describe(a) + " " + describe(b); });
    const Rational ma = a.measure(), mb = b.measure(), mu = a.unite(b).measure(), mi = a.intersect(b).measure();
    ie.check_lazy(mu + mi == ma + mb, [&] { return describe(a) + " " + describe(b); });
    sd.check_lazy(a.symmetric_difference(b).measure() == mu - mi, [&] { return describe(a) + " " + describe(b); });
    diff.check_lazy(a.difference(b).measure() == ma - mi, [&] { return describe(a) + " " + describe(b); });
    for (const auto& x : p.points)
      for (const auto& h : radii)
        tr.check_lazy(a.trace_measure(x, h, Side::Left) + a.trace_measure(x, h, Side::Right) ==
                          a.trace_measure(x, h, Side::Both),
                      [&] { return at(x); });
    const Rational z = random_shift(rng);
    const auto az = a.translate(z);
    sh.check_lazy(az.measure() == ma, [&] { return "z = " + to_string(z); });
    for (const auto& x : p.points)
      sh.check_lazy(az.contains(x + z) == a.contains(x), [&] { return at(x) + ", z = " + to_string(z); });
  }
}

// ---------------------------------------------------------------- families

Rational random_radius(Rng& rng, const Rational& max) {
  const long den = rng.uniform(2, 4096);
  return max * Rational(rng.uniform(1, den), den);
}

void suite_families(Ctx& c) {
  Rng rng(c.seed ^ 0x2e2e2e2eULL);
  const auto dyadic = ScaleFamily::dyadic_gap();
  const auto bump = ScaleFamily::bump_support();
  auto& closed = c.prop("dyadic_scale_closed_form");
  for (long k = 1; k <= 62; ++k)
    closed.check_lazy(dyadic.complement_trace_measure(pow2(-k)) == pow4(-k), [&] { return "k = " + std::to_string(k); });
  auto& bclosed = c.prop("bump_scale_closed_form");
  for (long k = 2; k <= 62; ++k)
    bclosed.check_lazy(bump.complement_trace_measure(pow2(-k)) == pow4(-k) / 3,
                       [&] { return "k = " + std::to_string(k); });

  auto& sandwich = c.prop("dyadic_sandwich");
  auto& quad = c.prop("bump_quadratic_bound");
  std::vector<Rational> hs = c.grid.scales();
  for (int i = 0; i < 200; ++i) hs.push_back(random_radius(rng, Rational(1, 2)));
  for (const auto& h : hs) {
    if (h <= dyadic.validity_radius()) {
      const Rational m = dyadic.complement_trace_measure(h);
      sandwich.check_lazy(h * h / 4 <= m && m <= 4 * h * h, [&] { return "h = " + to_string(h); });
    }
    if (h <= bump.validity_radius())
      quad.check_lazy(bump.complement_trace_measure(h) <= Rational(4, 3) * h * h, [&] { return "h = " + to_string(h); });
  }

  auto& bracket = c.prop("truncation_bracket");
  for (int i = 0; i < 200; ++i) {
    const bool use_dyadic = rng.chance(1, 2);
    const Construction con(use_dyadic ? FamilyKind::DyadicGap : FamilyKind::BumpSupport, Rational(rng.uniform(-8, 8), 4));
    const Rational h = random_radius(rng, con.validity_radius());
    const long depth = rng.uniform(1, 12);
    const Rational full = con.measure_within(con.anchor() - h, con.anchor() + h);
    const Rational part = con.prefix(depth).measure_within(con.anchor() - h, con.anchor() + h);
    const Rational tail = con.tail(depth + 1) * (con.mirrored() ? 2 : 1);
    bracket.check_lazy(part <= full && full <= part + tail,
                       [&] { return "h = " + to_string(h) + ", depth " + std::to_string(depth); });
  }

  auto& algebra = c.prop("canonical_form_algebra");
  auto& local = c.prop("localize_agrees");
  for (int i = 0; i < 200; ++i) {
    const Rational anchor(rng.uniform(-8, 8), 4);
    const ScaleFamily s = rng.chance(1, 2) ? ScaleFamily::dyadic_gap(anchor) : ScaleFamily::bump_support(anchor);
    const auto e = random_union(rng);
    Rational lo(rng.uniform(-40, 40), 8);
    Rational hi = lo + Rational(rng.uniform(1, 40), 8);
    const Rational w = hi - lo;
    const Rational ms = s.measure_within(lo, hi), me = e.measure_within(lo, hi);
    const Rational mu = s.union_with(e).measure_within(lo, hi), mi = s.intersect_with(e).measure_within(lo, hi);
    algebra.check_lazy(mu + mi == ms + me, [&] { return "anchor " + to_string(anchor) + " " + describe(e); });
    algebra.check_lazy(s.complement().measure_within(lo, hi) == w - ms, [&] { return "anchor " + to_string(anchor); });
    algebra.check_lazy(s.complement().complement() == s, [&] { return "anchor " + to_string(anchor); });
    const ScaleFamily t = s.union_with(e);
    algebra.check_lazy(s.unite(t).measure_within(lo, hi) == mu && s.intersect(t).measure_within(lo, hi) == ms,
                       [&] { return "anchor " + to_string(anchor) + " " + describe(e); });
    if (hi < anchor || lo > anchor) {
      local.check_lazy(s.localize(lo, hi).measure() == ms, [&] { return "window " + to_string(lo) + ", " + to_string(hi); });
    }
  }
  // windows on one side of the anchor
  for (int i = 0; i < 100; ++i) {
    const Rational u = random_radius(rng, Rational(1, 2));
    const Rational v = u + random_radius(rng, Rational(1, 2));
    for (const ScaleFamily& s : {dyadic, bump})
      for (int sign : {1, -1}) {
        const Rational lo = sign > 0 ? u : Rational(-v), hi = sign > 0 ? v : Rational(-u);
        local.check_lazy(s.localize(lo, hi).measure() == s.measure_within(lo, hi),
                         [&] { return "window " + to_string(lo) + ", " + to_string(hi); });
      }
  }
}

// ---------------------------------------------------------------- modulus

void suite_modulus(Ctx& c) {
  auto& axioms = c.prop("catalog_axioms");
  for (const auto& g : modulus_catalog()) {
    const auto r = validate_modulus(g);
    axioms.check_lazy(r.passed(), [&] { return g.name(); });
  }
  auto& cert = c.prop("condition_a_certificates");
  std::vector<Modulus> certified{Modulus::identity()};
  for (const auto& g : certified_moduli()) certified.push_back(g);
  for (const auto& g : certified) {
    for (double eps : {0.5, 0.1, 0.01}) {
      const auto r = check_condition_a(g, eps);
      bool ok = r.status == ConditionAStatus::Certificate && r.certificate.has_value();
      if (ok) {
        // c^p < eps (identity and bounded behave like p = 1 near 0)
        const Real cval = to_real(r.certificate->c_epsilon);
        const Real p = g.kind() == ModulusKind::Power ? to_real(g.exponent()) : Real(1);
        ok = mp::exp(p * mp::log(cval)) < Real(eps) * (g.kind() == ModulusKind::Bounded ? 2 : 1);
      }
      cert.check_lazy(ok, [&] { return g.name() + " at " + std::to_string(eps); });
    }
  }
  auto& refute = c.prop("log_refutation");
  const auto r = check_condition_a(Modulus::log(), 0.5);
  refute.check(r.status == ConditionAStatus::Refutation && r.refutation && r.refutation->min_ratio_at_finest >= 0.9 &&
                   r.refutation->finest_t <= pow2(-100),
               "log modulus at 0.5");
  refute.check(!certified_condition_a(Modulus::log()), "log modulus certified");

  auto& bound = c.prop("identity_bounded_ratio");
  const auto rb = ratio_bound(Modulus::identity(), Modulus::bounded(), 1);
  bound.check(rb.uniform && rb.lower >= 1 - 1e-12 && rb.upper <= 2 + 1e-12, "bounds outside [1, 2]");
  for (const auto& t : default_ratio_grid(1)) {
    const Real ratio = Modulus::identity()(t) / Modulus::bounded()(t);
    const Real oracle = Real(1) + to_real(t);
    bound.check_lazy(mp::abs(ratio - oracle) <= Real("1e-40") * oracle, [&] { return "t = " + to_string(t); });
  }

  auto& reject = c.prop("non_moduli_rejected");
  PsiDescriptor square;
  square.exponent = 2;  // t^2 is not subadditive
  PsiDescriptor jump;
  jump.continuous = false;
  for (const auto& psi : {square, jump}) {
    bool rejected = false;
    try {
      (void)from_psi(psi);
    } catch (const DomainError&) {
      rejected = true;
    }
    reject.check(rejected, "accepted " + Modulus::psi_unchecked(psi).name());
  }
  auto& lin = c.prop("psi_linear_bounded");
  for (const auto& psi : linear_bounded_psis()) lin.check(psi_linear_bounded(psi), "psi not linear bounded");
  PsiDescriptor root;
  root.exponent = Rational(1, 2);
  lin.check(!psi_linear_bounded(root), "sqrt judged linear bounded");
}

// ---------------------------------------------------------------- density

// a cut at each sampled point splits A into pieces whose traces add up to A's
bool split_traces_add_up(const RationalIntervalSet& a, const std::vector<Rational>& cuts, const Rational& x,
                         const Rational& s) {
  Rational split_sum = 0;
  for (const auto& iv : a.intervals()) {
    std::vector<Rational> inner;
    for (const auto& q : cuts)
      if (iv.lo < ExtRational(q) && ExtRational(q) < iv.hi) inner.push_back(q);
    std::sort(inner.begin(), inner.end());
    inner.erase(std::unique(inner.begin(), inner.end()), inner.end());
    std::vector<ExtRational> bounds{iv.lo};
    for (const auto& q : inner) bounds.emplace_back(q);
    bounds.push_back(iv.hi);
    for (std::size_t k = 0; k + 1 < bounds.size(); ++k)
      split_sum += RationalIntervalSet::normalize({{bounds[k], bounds[k + 1]}}).measure_within(x - s, x + s);
  }
  return split_sum == a.measure_within(x - s, x + s);
}

const std::vector<Target>& anchor_targets() {
  static const std::vector<Target> t{Target(ScaleFamily::dyadic_gap()), Target(ScaleFamily::bump_support())};
  return t;
}

void suite_density(Ctx& c) {
  const auto corpus = make_corpus(c.seed, c.options.pairs, c.options.points);
  const auto catalog = modulus_catalog();
  const auto& id = identity_modulus();
  const Target reals(RationalIntervalSet::real_line()), empty(RationalIntervalSet::empty());
  auto& law_reals = c.prop("reals_and_empty");
  auto& mono = c.prop("monotone");
  auto& inter = c.prop("intersection");
  auto& nullmod = c.prop("null_modification");
  auto& exact = c.prop("exact_corpus");
  auto& implies = c.prop("gamma_implies_lebesgue");
  const auto& g = c.grid;
  const auto& pol = c.policy;

  for (const auto& p : corpus) {
    const Target a(p.a), b(p.b), ab(p.a.intersect(p.b)), aub(p.a.unite(p.b));
    RepresentableSet minus(a);
    for (const auto& q : p.points) minus.remove(q);
    for (const auto& x : p.points) {
      for (const auto& s : g.scales())
        nullmod.check_lazy(split_traces_add_up(p.a, p.points, x, s), [&] { return at(x) + " " + describe(p.a); });
      const auto vid = classify_point(id, a, x, g, pol);
      for (const auto& gm : catalog) {
        const auto va = classify_point(gm, a, x, g, pol);
        const auto vb = classify_point(gm, b, x, g, pol);
        const auto vab = classify_point(gm, ab, x, g, pol);
        const auto vaub = classify_point(gm, aub, x, g, pol);
        const auto where = [&] { return gm.name() + " " + at(x) + " " + describe(p.a) + " " + describe(p.b); };
        law_reals.check_lazy(classify_point(gm, reals, x, g, pol).density == Truth::Yes &&
                                 classify_point(gm, empty, x, g, pol).density == Truth::No,
                             where);
        const bool da = va.density == Truth::Yes, db = vb.density == Truth::Yes, dab = vab.density == Truth::Yes;
        mono.check_lazy((!dab || (da && db)) && (!da || vaub.density == Truth::Yes), where);
        inter.check_lazy(dab == (da && db), where);
        exact.check_lazy(va.exact && vb.exact && vab.exact && vaub.exact && va.cls != PointClass::Indeterminate &&
                             vb.cls != PointClass::Indeterminate && vab.cls != PointClass::Indeterminate &&
                             vaub.cls != PointClass::Indeterminate,
                         where);
        // removing finitely many points is invisible to every trace
        nullmod.check_lazy(classify_point(gm, minus.kernel(), x, g, pol).cls == va.cls, where);
        implies.check_lazy(va.density != Truth::Yes || vid.density == Truth::Yes, where);
      }
    }
  }
  for (const auto& t : anchor_targets()) {
    const auto vid = classify_point(id, t, 0, g, pol);
    for (const auto& gm : catalog) {
      const auto v = classify_point(gm, t, 0, g, pol);
      implies.check_lazy(v.density != Truth::Yes || vid.density == Truth::Yes, [&] { return gm.name() + " at an anchor"; });
    }
  }
}

void suite_criteria(Ctx& c) {
  const auto corpus = make_corpus(c.seed, c.options.pairs, c.options.points);
  Rng rng(c.seed ^ 0x3d3d3d3dULL);
  const auto catalog = modulus_catalog();
  auto& onesided = c.prop("one_sided_equivalence");
  auto& seq = c.prop("sequential_criterion");
  auto& trans = c.prop("translation");
  const auto& g = c.grid;
  const auto& pol = c.policy;

  for (const auto& p : corpus) {
    const Target a(p.a);
    std::vector<Rational> zs;
    for (int i = 0; i < c.options.translations; ++i) zs.push_back(random_shift(rng));
    std::vector<Target> shifted;
    for (const auto& z : zs) shifted.push_back(a.translate(z));
    for (const auto& x : p.points)
      for (const auto& gm : catalog) {
        const auto where = [&] { return gm.name() + " " + at(x) + " " + describe(p.a); };
        const auto va = classify_point(gm, a, x, g, pol);
        const auto os = one_sided_equivalence_check(gm, a, x, g, pol);
        onesided.check_lazy(os.decided && os.equivalence_holds && os.inequalities_hold,
                            [&] { return where() + " " + os.failure; });
        const auto sc = sequential_criterion_check(gm, a, x, g, pol);
        seq.check_lazy(sc.agree && sc.bridge_holds && sc.grid_verdict != Truth::Unknown,
                       [&] { return where() + " " + sc.failure; });
        for (std::size_t i = 0; i < zs.size(); ++i) {
          const auto vz = classify_point(gm, shifted[i], x + zs[i], g, pol);
          trans.check_lazy(vz.cls == va.cls && vz.density == va.density && vz.dispersion == va.dispersion,
                           [&] { return where() + " z = " + to_string(zs[i]); });
        }
      }
  }
  const auto seq0 = sequential_criterion_check(identity_modulus(), anchor_targets()[0], 0, g, pol);
  seq.check(seq0.agree && seq0.bridge_holds && seq0.grid_verdict == Truth::Yes, "identity at the dyadic gap anchor");
}

void suite_coincidence(Ctx& c) {
  const auto corpus = make_corpus(c.seed, c.options.pairs, c.options.points);
  const auto& id = identity_modulus();
  auto& coincide = c.prop("coincidence_under_condition_a");
  auto& ratio_eq = c.prop("ratio_bound_equivalence");
  auto& psi_prop = c.prop("psi_implies_gamma");
  const auto psis = linear_bounded_psis();
  std::vector<Modulus> psi_moduli;
  for (const auto& psi : psis) psi_moduli.push_back(from_psi(psi));
  const auto& g = c.grid;
  const auto& pol = c.policy;

  const auto compare = [&](const Target& t, const Rational& x, const std::string& where) {
    const auto vid = classify_point(id, t, x, g, pol);
    for (const auto& gm : certified_moduli())
      coincide.check_lazy(classify_point(gm, t, x, g, pol).cls == vid.cls, [&] { return gm.name() + " " + where; });
    ratio_eq.check_lazy(classify_point(Modulus::bounded(), t, x, g, pol).cls == vid.cls, [&] { return where; });
    for (std::size_t i = 0; i < psis.size(); ++i) {
      const Truth tp = classify_psi_point(psis[i], t, x, g, pol);
      psi_prop.check_lazy(tp != Truth::Yes || classify_point(psi_moduli[i], t, x, g, pol).density == Truth::Yes,
                          [&] { return psi_moduli[i].name() + " " + where; });
    }
  };
  for (const auto& p : corpus) {
    const Target a(p.a);
    for (const auto& x : p.points) compare(a, x, at(x) + " " + describe(p.a));
  }
  for (const auto& t : anchor_targets()) compare(t, 0, "at an anchor");

  auto& strict = c.prop("log_dyadic_gap_strictness");
  const auto vl = classify_point(Modulus::log(), anchor_targets()[0], 0, g, pol);
  const auto vi = classify_point(id, anchor_targets()[0], 0, g, pol);
  strict.check(vi.density == Truth::Yes && vl.density == Truth::No && vl.cls == PointClass::Neither &&
                   std::abs(vl.limit_estimate - 0.5) < 0.05,
               "log at the dyadic gap anchor: " + to_string(vl.cls));
}

// ---------------------------------------------------------------- topology

RepresentableSet modified(Rng& rng, const CorpusPair& p) {
  RepresentableSet r(p.a);
  for (const auto& x : p.points) {
    const long pick = rng.uniform(0, 5);
    if (pick == 0) r.add(x);
    else if (pick == 1) r.remove(x);
  }
  return r;
}

bool in_closure(const RationalIntervalSet& s, const Rational& x) {
  for (const auto& iv : s.intervals())
    if (iv.lo <= ExtRational(x) && ExtRational(x) <= iv.hi) return true;
  return false;
}

void suite_topology(Ctx& c) {
  const auto corpus = make_corpus(c.seed, c.options.pairs, c.options.points);
  Rng rng(c.seed ^ 0x4c4c4c4cULL);
  const auto catalog = modulus_catalog();
  const auto& id = identity_modulus();
  const auto& g = c.grid;
  const auto& pol = c.policy;
  auto& finer = c.prop("finer_than_lebesgue");
  auto& coincide = c.prop("coincidence_open");
  auto& ratio_open = c.prop("ratio_bound_open");
  auto& psi_open = c.prop("psi_open_implies_gamma_open");
  auto& nbhd = c.prop("neighbourhood_consistency");
  auto& interior_prop = c.prop("interior_membership");
  auto& nullcheck = c.prop("interior_closure_null");
  auto& limits = c.prop("limit_points");
  const auto psis = linear_bounded_psis();
  std::vector<Modulus> psi_moduli;
  for (const auto& psi : psis) psi_moduli.push_back(from_psi(psi));

  for (const auto& p : corpus) {
    const auto r = modified(rng, p);
    const auto where = [&] { return representable_json(r).dump(); };
    const auto oid = is_gamma_open(id, r, g, pol);
    for (const auto& gm : catalog) {
      const auto o = is_gamma_open(gm, r, g, pol);
      finer.check_lazy(o.status != OpenStatus::Open || oid.status == OpenStatus::Open, [&] { return gm.name() + where(); });
      if (o.status == OpenStatus::Open) {
        for (const auto& x : p.points)
          if (r.contains(x))
            nbhd.check_lazy(classify_point(gm, r.kernel(), x, g, pol).density == Truth::Yes, [&] { return at(x) + where(); });
      } else if (o.status == OpenStatus::NotOpen) {
        nbhd.check_lazy(o.witness && r.contains(*o.witness) &&
                            classify_point(gm, r.kernel(), *o.witness, g, pol).density == Truth::No,
                        [&] { return gm.name() + where(); });
      } else {
        nbhd.check(false, "undecided on a finite union: " + where());
      }
      for (const auto& x : p.points) {
        const auto lp = limit_point_test(gm, r, x, g, pol);
        limits.check_lazy((lp == LimitStatus::LimitPoint) == in_closure(p.a, x), [&] { return at(x) + where(); });
      }
    }
    for (const auto& gm : certified_moduli())
      coincide.check_lazy(is_gamma_open(gm, r, g, pol).status == oid.status, [&] { return gm.name() + where(); });
    ratio_open.check_lazy(is_gamma_open(Modulus::bounded(), r, g, pol).status == oid.status, where);
    for (std::size_t i = 0; i < psis.size(); ++i) {
      const auto po = is_psi_open(psis[i], r, g, pol);
      psi_open.check_lazy(po.status != OpenStatus::Open || is_gamma_open(psi_moduli[i], r, g, pol).status == OpenStatus::Open,
                          where);
    }
    const auto inside = interior(id, r, p.points, g, pol);
    bool all_interior = true;
    for (std::size_t i = 0; i < p.points.size(); ++i) {
      const Rational& x = p.points[i];
      interior_prop.check_lazy(inside[i] != Truth::Yes || r.contains(x), [&] { return at(x) + where(); });
      if (r.contains(x) && inside[i] != Truth::Yes) all_interior = false;
    }
    interior_prop.check_lazy(oid.status != OpenStatus::Open || all_interior, where);

    const auto nc = interior_closure_null_check(id, r);
    bool ok = nc.null && nc.interior_difference_measure == 0 && nc.closure_difference_measure == 0;
    for (const auto& x : nc.interior_difference) ok = ok && r.is_added(x);
    for (const auto& x : nc.closure_difference) ok = ok && (p.a.is_endpoint(x) || r.is_removed(x));
    nullcheck.check_lazy(ok, where);
  }

  // null sets have no limit points, half-lines do at their endpoint
  const auto recips = RepresentableSet::null_set({}, {CountableFamily::reciprocals()});
  const auto unit = RepresentableSet(RationalIntervalSet::interval(0, 1));
  for (const auto& gm : catalog) {
    for (const Rational& x : {Rational(0), Rational(1, 2), Rational(1, 7)})
      limits.check_lazy(limit_point_test(gm, recips, x, g, pol) == LimitStatus::NotLimitPoint,
                        [&] { return "reciprocals " + at(x); });
    limits.check(limit_point_test(gm, unit, 0, g, pol) == LimitStatus::LimitPoint, "(0,1) at 0");
    limits.check(limit_point_test(gm, RepresentableSet(ScaleFamily::dyadic_gap()), 0, g, pol) == LimitStatus::LimitPoint,
                 "dyadic gap at its anchor");
  }

  auto& countable = c.prop("countable_closed");
  const std::vector<Rational> probes{Rational(1, 2), Rational(7071, 10000), Rational(-3), Rational(2, 3),
                                     Rational(10001, 20000)};
  for (const auto& gm : catalog) {
    const auto rep = countable_closed_check(gm, {}, {CountableFamily::reciprocals(10000)}, probes, g, pol);
    countable.check(rep.complement_open && rep.all_traces_zero && rep.singletons_relatively_open,
                    gm.name() + " reciprocals");
    const auto rq = countable_closed_check(gm, {}, {CountableFamily::rationals_in(0, 1)}, {Rational(-1), Rational(2)}, g, pol);
    countable.check(rq.complement_open && rq.all_traces_zero && rq.singletons_relatively_open && rq.no_finite_subcover,
                    gm.name() + " rationals");
    const auto re = countable_closed_check(gm, {}, {}, probes, g, pol);
    countable.check(re.complement_open && re.all_traces_zero, gm.name() + " empty");
  }

  auto& example = c.prop("dyadic_gap_open_set");
  const auto u = RepresentableSet::dyadic_gap_density_set();
  const auto ou_id = is_gamma_open(id, u, g, pol);
  const auto ou_log = is_gamma_open(Modulus::log(), u, g, pol);
  example.check(ou_id.status == OpenStatus::Open, "U open for identity");
  example.check(ou_log.status == OpenStatus::NotOpen && ou_log.witness && *ou_log.witness == 0, "U not open for log");
  for (const auto& gm : certified_moduli())
    example.check(is_gamma_open(gm, u, g, pol).status == OpenStatus::Open, "U open for " + gm.name());
  const auto ob = is_gamma_open(id, RepresentableSet(ScaleFamily::dyadic_gap()), g, pol);
  example.check(ob.status == OpenStatus::NotOpen && ob.witness && *ob.witness != 0, "B keeps its endpoints");
}

// ---------------------------------------------------------------- approx

void suite_approx(Ctx& c) {
  Rng rng(c.seed ^ 0x5a5a5a5aULL);
  const auto& g = c.grid;
  const auto& pol = c.policy;
  const std::vector<Modulus> gammas{Modulus::identity(), Modulus::power(Rational(1, 2))};

  auto& bump = c.prop("bump_counterexample");
  const auto w = build_bump_function(50);
  for (long n = 1; n <= 50; ++n) bump.check_lazy(w.f(bump_peak(n)) == n, [&] { return "peak " + std::to_string(n); });
  bump.check(sampled_sup_distance(w.f, Function::constant(0), 0, 1) == 50, "sup of the truncation");
  for (long n : {1L, 10L, 25L}) {
    const auto s = sampled_sup_distance(Function::bump_sum(n), Function::constant(0), 0, 1);
    bump.check(s == n, "sup of truncation " + std::to_string(n));
  }
  for (const auto& x : std::vector<Rational>{Rational(3, 16), Rational(-1, 3), Rational(1, 3), Rational(5, 128)})
    if (!ScaleFamily::bump_support().complement().contains(x) || x <= 0)
      bump.check_lazy(w.f(x) == 0, [&] { return at(x); });
  std::vector<Modulus> certified{Modulus::identity()};
  for (const auto& gm : certified_moduli()) certified.push_back(gm);
  for (const auto& gm : certified)
    bump.check_lazy(check_point(w, 0, gm, g, pol).overall == Truth::Yes, [&] { return gm.name(); });

  auto& pass = c.prop("random_functions_pass");
  auto& space = c.prop("vector_space");
  auto& combo = c.prop("witness_intersection_density");
  auto& comp = c.prop("composition");
  auto& reject = c.prop("composition_rejects_discontinuous");
  auto& unif = c.prop("uniform_limit");
  const std::vector<PiecewisePoly> phis{PiecewisePoly::polynomial({0, 0, 1}), PiecewisePoly::polynomial({-1, 3}),
                                        PiecewisePoly::abs()};
  for (int i = 0; i < c.options.function_pairs; ++i) {
    const Rational x0(rng.uniform(-16, 16), 8);
    const auto f = random_witnessed_function(rng, x0);
    const auto h = random_witnessed_function(rng, x0);
    const Rational scalar(rng.uniform(-12, 12), rng.uniform(1, 4));
    const auto& gm = gammas[i % gammas.size()];
    const auto where = [&] { return "pair " + std::to_string(i) + " " + at(x0) + " " + gm.name(); };
    const auto vf = check_point(f, x0, gm, g, pol);
    const auto vh = check_point(h, x0, gm, g, pol);
    pass.check_lazy(vf.overall == Truth::Yes && vh.overall == Truth::Yes, where);
    const auto sum = sum_is_approx_continuous(f, h, x0, gm, {-3, Rational(1, 2), scalar}, g, pol);
    space.check_lazy(sum.precondition && sum.holds, where);
    const auto combined = combine_witnesses(f.witness(x0), h.witness(x0));
    combo.check_lazy(classify_point(gm, combined.kernel(), x0, g, pol).density == Truth::Yes, where);
    for (const auto& phi : phis) {
      const auto cr = compose_continuous(f, phi, x0, gm, g, pol);
      comp.check_lazy(cr.holds && cr.after.overall == Truth::Yes, where);
    }
    // a jump of phi exactly at f(x0)
    PiecewisePoly jump;
    const Rational y0 = f.f(x0);
    jump.pieces.push_back({ExtRational::neg_inf(), y0, {0}});
    jump.pieces.push_back({y0, ExtRational::pos_inf(), {1}});
    bool rejected = false;
    try {
      (void)compose_continuous(f, jump, x0, gm, g, pol);
    } catch (const HypothesisError&) {
      rejected = true;
    }
    reject.check_lazy(rejected, where);
    if (i % 10 == 0) {
      std::vector<Function> seq;
      const auto common = combine_witnesses(f.witness(x0), RepresentableSet(ScaleFamily::bump_support(x0)));
      for (int n = 1; n <= 8; ++n) seq.push_back(f.f + Function::bump_sum(5, x0).scaled(Rational(1, n)));
      const auto ur = uniform_limit_check(seq, f.f, x0, common, gm, g, pol);
      unif.check_lazy(ur.holds, where);
    }
  }
  std::vector<Function> consts;
  for (int n = 1; n <= 8; ++n) consts.push_back(Function::constant(Rational(1, n)));
  unif.check(uniform_limit_check(consts, Function::constant(0), 0, RepresentableSet(RationalIntervalSet::real_line()),
                                 Modulus::identity(), g, pol)
                 .holds,
             "constants 1/n");
}

const std::map<std::string, std::function<void(Ctx&)>>& suites() {
  static const std::map<std::string, std::function<void(Ctx&)>> s{
      {"interval", suite_interval}, {"families", suite_families}, {"modulus", suite_modulus},
      {"density", suite_density},   {"criteria", suite_criteria}, {"coincidence", suite_coincidence},
      {"topology", suite_topology}, {"approx", suite_approx}};
  return s;
}

}  // namespace

std::vector<std::string> verify_suites() {
  return {"interval", "families", "modulus", "density", "criteria", "coincidence", "topology", "approx", "all"};
}

VerifyReport run_verify(const std::string& suite, std::uint64_t seed, const GridSpec& grid, const Policy& policy,
                        const VerifyOptions& options) {
  grid.validate();
  policy.validate();
  if (options.pairs < 1 || options.points < 1 || options.translations < 0 || options.function_pairs < 1)
    throw DomainError("verify sizes must be positive");
  VerifyReport report;
  report.suite = suite;
  report.seed = seed;
  report.grid = grid;
  report.policy = policy;
  report.options = options;
  std::vector<std::string> names;
  if (suite == "all") {
    names = verify_suites();
    names.pop_back();
  } else if (suites().count(suite)) {
    names = {suite};
  } else {
    throw ParseError("unknown suite '" + suite + "'");
  }
  for (const auto& n : names) {
    Ctx c{seed, grid, policy, options, n, {}};
    suites().at(n)(c);
    report.properties.insert(report.properties.end(), c.props.begin(), c.props.end());
  }
  return report;
}

}  // namespace gdensity
