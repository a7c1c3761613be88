#include "gdensity/reproduce.hpp"

namespace gdensity {

Json reproduce_dyadic_gap() {
  const auto b = ScaleFamily::dyadic_gap();
  const Modulus id = Modulus::identity();
  const Modulus lg = Modulus::log();
  Json rows = Json::array();
  bool sandwich = true;
  bool lebesgue_bound = true;
  bool tail_near_half = true;
  const long first = 10, last = 60;
  for (long k = first; k <= last; ++k) {
    const Rational h = pow2(-k);
    const Rational m = b.complement_trace_measure(h);
    const bool in_sandwich = h * h / 4 <= m && m <= 4 * h * h;
    const bool below = m / (2 * h) <= 2 * h;
    const double log_ratio = to_double(lg(m) / lg(Rational(2 * h)));
    sandwich = sandwich && in_sandwich;
    lebesgue_bound = lebesgue_bound && below;
    if (k > last - 10 && std::abs(log_ratio - 0.5) >= 0.05) tail_near_half = false;
    rows.push_back({{"k", k},
                    {"measure", rational_json(m)},
                    {"identity_ratio", to_double(to_real(Rational(m / (2 * h))))},
                    {"identity_ratio_at_most_2h", below},
                    {"sandwich", in_sandwich},
                    {"log_ratio", log_ratio}});
  }
  const auto vi = classify_point(id, b, 0);
  const auto vl = classify_point(lg, b, 0);
  const bool converse_fails = vi.cls == PointClass::GammaDensityPoint && vl.density == Truth::No;
  Json out{{"example", "ex17"},
           {"set", "dyadic-gap"},
           {"point", rational_json(0)},
           {"rows", rows},
           {"identity_verdict", verdict_json(vi)},
           {"log_verdict", verdict_json(vl)},
           {"summary",
            {{"sandwich_exact", sandwich},
             {"identity_ratio_at_most_2h", lebesgue_bound},
             {"log_ratio_last10_within_0.05_of_half", tail_near_half},
             {"lebesgue_density_but_not_log_density", converse_fails}}}};
  out["passed"] = sandwich && lebesgue_bound && tail_near_half && converse_fails;
  return out;
}

Json reproduce_open_set() {
  const auto u = RepresentableSet::dyadic_gap_density_set();
  Json moduli = Json::array();
  bool identity_open = false, log_not_open_at_anchor = false;
  for (const auto& g : modulus_catalog()) {
    const auto v = is_gamma_open(g, u);
    Json j = open_json(v);
    j["gamma"] = g.name();
    moduli.push_back(j);
    if (g.kind() == ModulusKind::Identity) identity_open = v.status == OpenStatus::Open;
    if (g.kind() == ModulusKind::Log)
      log_not_open_at_anchor = v.status == OpenStatus::NotOpen && v.witness && *v.witness == 0;
  }
  Json out{{"example", "ex28"},
           {"set", "dyadic-gap-u"},
           {"description", u.describe()},
           {"moduli", moduli},
           {"summary", {{"identity_open", identity_open}, {"log_not_open_witness_anchor", log_not_open_at_anchor}}}};
  out["passed"] = identity_open && log_not_open_at_anchor;
  return out;
}

Json reproduce_bump(long n_max) {
  const auto w = build_bump_function(n_max);
  bool peaks = true;
  for (long n = 1; n <= n_max; ++n) peaks = peaks && w.f(bump_peak(n)) == n;
  const Function zero = Function::constant(0);
  const Rational sup = sampled_sup_distance(w.f, zero, 0, 1);
  Json sups = Json::array();
  bool growing = true;
  Rational previous = 0;
  for (long n : {1L, 2L, 5L, 10L, 20L, 50L}) {
    if (n > n_max) break;
    const Rational s = sampled_sup_distance(Function::bump_sum(n), zero, 0, 1);
    growing = growing && s > previous && s == n;
    previous = s;
    sups.push_back({{"n_max", n}, {"sup", rational_json(s)}});
  }
  // witness complement: |(-h, h) \ A| = |(0, h) n u I_n| <= (4/3) h^2
  const auto witness = ScaleFamily::bump_support();
  const Rational constant(4, 3);
  bool quadratic = true;
  long scales = 0;
  for (const auto& h : GridSpec{}.scales()) {
    if (h > witness.validity_radius()) continue;
    quadratic = quadratic && witness.complement_trace_measure(h) <= constant * h * h;
    ++scales;
  }
  Json checks = Json::array();
  bool pass_at_zero = true;
  for (const auto& g : {Modulus::identity(), Modulus::power(Rational(1, 2))}) {
    const auto v = check_point(w, 0, g);
    pass_at_zero = pass_at_zero && v.overall == Truth::Yes;
    Json j = approx_json(v);
    j["gamma"] = g.name();
    checks.push_back(j);
  }
  Json out{{"example", "bump"},
           {"n_max", n_max},
           {"sup", rational_json(sup)},
           {"peaks_exact", peaks},
           {"sup_by_truncation", sups},
           {"quadratic_bound", {{"constant", rational_json(constant)}, {"holds", quadratic}, {"scales", scales}}},
           {"check_point", checks},
           {"summary",
            {{"sup_equals_n_max", sup == n_max},
             {"sup_grows_with_truncation", growing},
             {"approximately_continuous_at_zero", pass_at_zero}}}};
  out["passed"] = peaks && sup == n_max && growing && quadratic && pass_at_zero;
  return out;
}

Json reproduce(const std::string& id) {
  if (id == "ex17") return reproduce_dyadic_gap();
  if (id == "ex28") return reproduce_open_set();
  if (id == "bump") return reproduce_bump();
  throw ParseError("unknown example '" + id + "' (expected ex17, ex28 or bump)");
}

std::vector<std::string> reproduction_ids() { return {"ex17", "ex28", "bump"}; }

}  // namespace gdensity
