// Acceptance criteria: one PASS/FAIL line each. Usage: acceptance <path to gdensity CLI> <work dir>
#include "gdensity/reproduce.hpp"
#include "gdensity/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

using namespace gdensity;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(int id, bool ok, const std::string& what, double secs, const std::string& detail = {}) {
  if (!ok) ++failures;
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << "criterion " << id << ": " << (ok ? "PASS" : "FAIL") << "  " << what;
  if (secs >= 0) os << "  (" << secs << " s)";
  else os << "  (from the verify report)";
  if (!detail.empty()) os << "  " << detail;
  std::cout << os.str() << std::endl;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Whether every named property is present in the report and passed.
bool properties_pass(const Json& rep, std::initializer_list<const char*> names, std::string& detail) {
  for (const char* n : names) {
    bool found = false;
    for (const auto& p : rep["properties"]) {
      if (p["name"] != n) continue;
      found = true;
      if (!p["passed"].get<bool>()) {
        detail = std::string(n) + ": " + p["first_failure"].get<std::string>();
        return false;
      }
    }
    if (!found) {
      detail = std::string(n) + " missing";
      return false;
    }
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <cli> <work dir>\n";
    return 2;
  }
  const std::string cli = argv[1], work = argv[2];

  // 1. log ratio near 1/2 at the dyadic gap anchor, identity sandwich exact
  {
    const auto t0 = Clock::now();
    std::vector<Rational> scales;
    for (long k = 10; k <= 60; ++k) scales.push_back(pow2(-k));
    const ScaleFamily gap = ScaleFamily::dyadic_gap();
    const auto t = ratio_trace_on(Modulus::log(), Target(gap), 0, Side::Both, scales);
    bool ok = t.ratios.size() == scales.size();
    double worst = 0;
    for (std::size_t i = scales.size() - 10; ok && i < scales.size(); ++i)
      worst = std::max(worst, std::abs(t.ratios[i].convert_to<double>() - 0.5));
    ok = ok && worst <= 0.05;
    for (const auto& h : scales) {
      const Rational m = gap.complement_trace_measure(h);
      ok = ok && m / (2 * h) <= 2 * h && h * h / 4 <= m && m <= 4 * h * h;
    }
    ok = ok && reproduce("ex17")["passed"].get<bool>();
    const double secs = seconds_since(t0);
    report(1, ok && secs < 5, "log ratio within 0.05 of 1/2 on k = 51..60; m(h)/2h <= 2h exactly", secs,
           "max |ratio - 1/2| = " + std::to_string(worst));
  }

  // 2. Condition (A)
  {
    const auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    std::vector<Modulus> certified{Modulus::identity()};
    for (const auto& p : {Rational(1, 4), Rational(1, 2), Rational(3, 4)}) certified.push_back(Modulus::power(p));
    for (const auto& g : certified)
      for (double eps : {0.5, 0.1, 0.01}) {
        const auto r = check_condition_a(g, eps);
        bool good = r.status == ConditionAStatus::Certificate && r.certificate;
        if (good) {
          // c^p < eps
          const double c = to_real(r.certificate->c_epsilon).convert_to<double>();
          const double p = g.kind() == ModulusKind::Power ? to_real(g.exponent()).convert_to<double>() : 1.0;
          good = std::pow(c, p) < eps;
        }
        if (!good && detail.empty()) detail = g.name() + " at " + std::to_string(eps);
        ok = ok && good;
      }
    const auto r = check_condition_a(Modulus::log(), 0.5);
    const bool refuted = r.status == ConditionAStatus::Refutation && r.refutation &&
                         r.refutation->min_ratio_at_finest >= 0.9 && r.refutation->finest_t <= pow2(-100);
    ok = ok && refuted;
    const double secs = seconds_since(t0);
    report(2, ok && secs < 5, "certificates for identity and t^p; log refuted with ratio >= 0.9 at t <= 2^-100", secs,
           refuted ? detail : "log: " + std::to_string(r.refutation ? r.refutation->min_ratio_at_finest : 0.0));
  }

  // 10 first: the full suite, twice through the CLI
  const auto t10 = Clock::now();
  const std::string a = work + "/verify_a.json", b = work + "/verify_b.json";
  const int code_a = std::system((cli + " verify --suite all --seed 42 --out " + a).c_str());
  const int code_b = std::system((cli + " verify --suite all --seed 42 --out " + b).c_str());
  const double secs10 = seconds_since(t10);
  const std::string ra = slurp(a), rb = slurp(b);
  Json rep = Json::object();
  try {
    rep = Json::parse(ra);
  } catch (const Json::exception&) {
  }

  // 3. the four laws on the seeded corpus
  {
    const auto t0 = Clock::now();
    const auto r = run_verify("density", 42);
    const double secs = seconds_since(t0);
    std::string detail;
    const Json j = r.json();
    const bool ok = r.options.pairs == 500 && r.options.points == 10 &&
                    properties_pass(j, {"reals_and_empty", "monotone", "intersection", "null_modification",
                                        "exact_corpus"},
                                    detail);
    report(3, ok && secs < 60, "reals, monotone, intersection (biconditional), null modification; no Indeterminate", secs,
           detail);
  }

  const auto from_report = [&](int id, const std::string& what, std::initializer_list<const char*> names,
                               bool extra = true) {
    std::string detail;
    const bool ok = extra && rep.contains("properties") && properties_pass(rep, names, detail);
    report(id, ok, what, -1, detail);
  };

  // 4
  from_report(4, "one-sided equivalence, grid vs sequence, translation by 20 rationals",
              {"one_sided_equivalence", "sequential_criterion", "translation"},
              rep.value("/options/translations"_json_pointer, 0) == 20);

  // 5
  {
    const Target gap(ScaleFamily::dyadic_gap());
    const bool disagree = classify_point(Modulus::log(), gap, 0).cls != classify_point(Modulus::identity(), gap, 0).cls;
    from_report(5, "t^p and bounded agree with identity (points and open sets); log differs at the anchor",
                {"coincidence_under_condition_a", "coincidence_open", "log_dyadic_gap_strictness", "dyadic_gap_open_set"},
                disagree);
  }

  // 6
  from_report(6, "identity vs bounded: ratio in [1, 2], same verdicts, same open sets",
              {"identity_bounded_ratio", "ratio_bound_equivalence", "ratio_bound_open"});

  // 7
  {
    const auto t0 = Clock::now();
    bool ok = true;
    std::size_t members = 0;
    for (const auto& g : modulus_catalog()) {
      const auto r = countable_closed_check(g, {}, {CountableFamily::reciprocals(10000)},
                                            {Rational(1, 2), Rational(7071, 10000), Rational(-3)});
      ok = ok && r.complement_open && r.all_traces_zero && r.singletons_relatively_open && r.samples.size() == 3;
      members = r.members_checked;
    }
    std::string detail;
    ok = ok && properties_pass(rep, {"countable_closed"}, detail);
    report(7, ok, "complement of {1/n : n <= 10^4} u {0} open for every catalog modulus; singleton cover reported",
           seconds_since(t0), detail.empty() ? "cover members checked: " + std::to_string(members) : detail);
  }

  // 8
  {
    const auto t0 = Clock::now();
    const Json r = reproduce_bump(50);
    const auto w = build_bump_function(50);
    bool ok = r["passed"].get<bool>();
    for (long n = 1; n <= 50; ++n) ok = ok && w.f(bump_peak(n)) == n;
    ok = ok && sampled_sup_distance(w.f, Function::constant(0), 0, 1) == 50;
    const auto bump = ScaleFamily::bump_support();
    for (const auto& h : GridSpec{}.scales())
      if (h <= bump.validity_radius()) ok = ok && bump.complement_trace_measure(h) <= Rational(4, 3) * h * h;
    ok = ok && check_point(w, 0, Modulus::identity()).overall == Truth::Yes &&
         check_point(w, 0, Modulus::power(Rational(1, 2))).overall == Truth::Yes;
    const double secs = seconds_since(t0);
    report(8, ok && secs < 10, "bump sum: f(c_n) = n, sup = 50, m(h) <= (4/3) h^2, approximately continuous at 0", secs);
  }

  // 9
  from_report(9, "100 witnessed pairs: sums, multiples, compositions with t^2, 3t - 1, |t|",
              {"random_functions_pass", "vector_space", "composition", "witness_intersection_density"},
              rep.value("/options/function_pairs"_json_pointer, 0) == 100);

  // 10
  {
    const bool ok = code_a == 0 && code_b == 0 && !ra.empty() && ra == rb && rep.value("passed", false);
    report(10, ok, "verify --suite all --seed 42 twice: byte-identical, all properties pass", secs10,
           "exit codes " + std::to_string(code_a) + ", " + std::to_string(code_b) + "; " + std::to_string(ra.size()) +
               " bytes");
  }

  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures == 0 ? 0 : 1;
}
