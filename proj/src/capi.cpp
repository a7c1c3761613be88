#include "gdensity/gdensity.h"

#include "gdensity/plot.hpp"
#include "gdensity/reproduce.hpp"
#include "gdensity/verify.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

using namespace gdensity;

struct gd_modulus {
  Modulus g;
};
struct gd_set {
  RepresentableSet s;
};
struct gd_function {
  Function f;
};

namespace {

thread_local std::string last_error;

gd_status fail(gd_status code, const std::string& msg) {
  last_error = msg;
  return code;
}

template <class F>
gd_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const ParseError& e) {
    return fail(GD_ERR_PARSE, e.what());
  } catch (const Json::exception& e) {
    return fail(GD_ERR_PARSE, e.what());
  } catch (const DomainError& e) {
    return fail(GD_ERR_DOMAIN, e.what());
  } catch (const HypothesisError& e) {
    return fail(GD_ERR_HYPOTHESIS, e.what());
  } catch (const std::bad_alloc&) {
    return fail(GD_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(GD_ERR_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

#define GD_REQUIRE(cond)                                                 \
  do {                                                                   \
    if (!(cond)) return fail(GD_ERR_INVALID_ARGUMENT, "null argument"); \
  } while (0)

Json options_of(const char* options_json) {
  if (!options_json || !*options_json) return Json::object();
  Json j = Json::parse(options_json);
  if (!j.is_object()) throw ParseError("options must be a JSON object");
  return j;
}

void config_of(const Json& opts, GridSpec& grid, Policy& policy) {
  apply_overrides(opts, grid, policy);
  grid.validate();
  policy.validate();
}

Json countable_closed_json(const CountableClosedReport& r, const std::vector<Rational>& points,
                           const std::vector<CountableFamily>& families) {
  Json samples = Json::array();
  for (const auto& s : r.samples)
    samples.push_back({{"x", rational_json(s.x)},
                       {"in_set", s.in_set},
                       {"complement_trace", rational_json(s.complement_trace)}});
  Json fams = Json::array();
  for (const auto& f : families) fams.push_back(family_json(f));
  Json pts = Json::array();
  for (const auto& p : points) pts.push_back(rational_json(p));
  return {{"closed_set", {{"points", pts}, {"families", fams}}},
          {"complement_open", r.complement_open},
          {"samples", samples},
          {"all_traces_zero", r.all_traces_zero},
          {"singleton_cover",
           {{"members_checked", r.members_checked},
            {"singletons_relatively_open", r.singletons_relatively_open},
            {"infinite", r.infinite},
            {"no_finite_subcover", r.no_finite_subcover}}}};
}

}  // namespace

extern "C" {

const char* gd_version(void) { return "0.1.0"; }

const char* gd_last_error(void) { return last_error.c_str(); }

void gd_string_free(char* s) { std::free(s); }

gd_status gd_modulus_parse(const char* spec, gd_modulus** out) {
  GD_REQUIRE(spec && out);
  return guarded([&] {
    *out = new gd_modulus{parse_modulus(spec)};
    return GD_OK;
  });
}

void gd_modulus_free(gd_modulus* g) { delete g; }

gd_status gd_modulus_name(const gd_modulus* g, char** out) {
  GD_REQUIRE(g && out);
  return guarded([&] {
    *out = dup(g->g.name());
    return GD_OK;
  });
}

gd_status gd_modulus_eval(const gd_modulus* g, const char* t, double* out) {
  GD_REQUIRE(g && t && out);
  return guarded([&] {
    *out = to_double(g->g(parse_rational(t)));
    return GD_OK;
  });
}

gd_status gd_set_parse(const char* spec, gd_set** out) {
  GD_REQUIRE(spec && out);
  return guarded([&] {
    *out = new gd_set{parse_set_spec(spec)};
    return GD_OK;
  });
}

void gd_set_free(gd_set* s) { delete s; }

gd_status gd_set_contains(const gd_set* s, const char* x, int* out) {
  GD_REQUIRE(s && x && out);
  return guarded([&] {
    *out = s->s.contains(parse_rational(x)) ? 1 : 0;
    return GD_OK;
  });
}

gd_status gd_set_measure_within(const gd_set* s, const char* lo, const char* hi, char** out) {
  GD_REQUIRE(s && lo && hi && out);
  return guarded([&] {
    const Rational a = parse_rational(lo), b = parse_rational(hi);
    if (b < a) throw DomainError("window with hi < lo");
    *out = dup(to_string(s->s.kernel().measure_within(a, b)));
    return GD_OK;
  });
}

gd_status gd_set_describe(const gd_set* s, char** out_json) {
  GD_REQUIRE(s && out_json);
  return guarded([&] {
    *out_json = dup(representable_json(s->s).dump(2));
    return GD_OK;
  });
}

gd_status gd_function_parse(const char* json, gd_function** out) {
  GD_REQUIRE(json && out);
  return guarded([&] {
    *out = new gd_function{function_from_json(Json::parse(json))};
    return GD_OK;
  });
}

void gd_function_free(gd_function* f) { delete f; }

gd_status gd_function_eval(const gd_function* f, const char* x, char** out) {
  GD_REQUIRE(f && x && out);
  return guarded([&] {
    *out = dup(to_string(f->f(parse_rational(x))));
    return GD_OK;
  });
}

gd_status gd_trace(const gd_modulus* g, const gd_set* s, const char* point, const char* format,
                   const char* options_json, char** out) {
  GD_REQUIRE(g && s && point && format && out);
  return guarded([&] {
    const Json opts = options_of(options_json);
    GridSpec grid;
    Policy policy;
    config_of(opts, grid, policy);
    const Side side = side_from_string(opts.value("side", std::string("both")));
    const std::string measured = opts.value("measured", std::string("complement"));
    if (measured != "complement" && measured != "set") throw ParseError("measured must be complement or set");
    const Rational x = parse_rational(point);
    const auto t = ratio_trace(g->g, s->s.kernel(), x, side, grid,
                               measured == "set" ? Measured::Set : Measured::Complement);
    const std::string f = format;
    if (f == "csv") *out = dup(trace_csv(t));
    else if (f == "json") *out = dup(trace_json(t).dump(2) + "\n");
    else if (f == "ascii") *out = dup(ascii_plot(t));
    else if (f == "svg") *out = dup(svg_plot(t, g->g.name() + " at " + to_string(x)));
    else throw ParseError("unknown format '" + f + "'");
    return GD_OK;
  });
}

gd_status gd_classify(const gd_modulus* g, const gd_set* s, const char* point, const char* options_json,
                      char** out_json) {
  GD_REQUIRE(g && s && point && out_json);
  return guarded([&] {
    GridSpec grid;
    Policy policy;
    config_of(options_of(options_json), grid, policy);
    const Rational x = parse_rational(point);
    Json j = verdict_json(classify_point(g->g, s->s.kernel(), x, grid, policy));
    j["modulus"] = g->g.name();
    j["point"] = rational_json(x);
    j["in_set"] = s->s.contains(x);
    j["grid"] = grid_json(grid);
    j["policy"] = policy_json(policy);
    *out_json = dup(j.dump(2) + "\n");
    return GD_OK;
  });
}

gd_status gd_condition_a(const gd_modulus* g, double epsilon, char** out_json) {
  GD_REQUIRE(g && out_json);
  return guarded([&] {
    Json j = condition_a_json(check_condition_a(g->g, epsilon));
    j["modulus"] = g->g.name();
    *out_json = dup(j.dump(2) + "\n");
    return GD_OK;
  });
}

gd_status gd_validate_modulus(const gd_modulus* g, char** out_json, int* passed) {
  GD_REQUIRE(g && out_json);
  return guarded([&] {
    const auto r = validate_modulus(g->g);
    Json j = validation_json(r);
    j["modulus"] = g->g.name();
    *out_json = dup(j.dump(2) + "\n");
    if (passed) *passed = r.passed() ? 1 : 0;
    return GD_OK;
  });
}

gd_status gd_open(const gd_modulus* g, const gd_set* s, const char* options_json, char** out_json) {
  GD_REQUIRE(g && s && out_json);
  return guarded([&] {
    GridSpec grid;
    Policy policy;
    config_of(options_of(options_json), grid, policy);
    Json j = open_json(is_gamma_open(g->g, s->s, grid, policy));
    j["modulus"] = g->g.name();
    j["set"] = representable_json(s->s);
    const auto& k = s->s.kernel();
    const bool cocountable = k.is_interval_set() && *k.interval_set() == RationalIntervalSet::real_line() &&
                             s->s.added().empty() && s->s.added_families().empty() &&
                             (!s->s.removed().empty() || !s->s.removed_families().empty());
    if (cocountable) {
      const std::vector<Rational> probes{Rational(1, 2), Rational(2, 3), Rational(7071, 10000), Rational(-3)};
      const auto r = countable_closed_check(g->g, s->s.removed(), s->s.removed_families(), probes, grid, policy);
      j["countable_closed"] = countable_closed_json(r, s->s.removed(), s->s.removed_families());
    }
    *out_json = dup(j.dump(2) + "\n");
    return GD_OK;
  });
}

gd_status gd_approx_continuity(const gd_function* f, const gd_set* witness, const char* x0, const gd_modulus* g,
                               const char* options_json, char** out_json) {
  GD_REQUIRE(f && witness && x0 && g && out_json);
  return guarded([&] {
    GridSpec grid;
    Policy policy;
    config_of(options_of(options_json), grid, policy);
    const Rational x = parse_rational(x0);
    Json j = approx_json(check_point_with(f->f, witness->s, x, g->g, grid, policy));
    j["modulus"] = g->g.name();
    j["point"] = rational_json(x);
    *out_json = dup(j.dump(2) + "\n");
    return GD_OK;
  });
}

gd_status gd_reproduce(const char* id, char** out_json, int* passed) {
  GD_REQUIRE(id && out_json);
  return guarded([&] {
    const Json j = reproduce(id);
    *out_json = dup(j.dump(2) + "\n");
    if (passed) *passed = j.value("passed", false) ? 1 : 0;
    return GD_OK;
  });
}

gd_status gd_verify(const char* suite, uint64_t seed, const char* options_json, char** out_json, int* passed) {
  GD_REQUIRE(suite && out_json);
  return guarded([&] {
    const Json opts = options_of(options_json);
    GridSpec grid;
    Policy policy;
    config_of(opts, grid, policy);
    VerifyOptions vo;
    vo.pairs = opts.value("pairs", vo.pairs);
    vo.points = opts.value("points", vo.points);
    vo.translations = opts.value("translations", vo.translations);
    vo.function_pairs = opts.value("function_pairs", vo.function_pairs);
    const auto r = run_verify(suite, seed, grid, policy, vo);
    *out_json = dup(r.json().dump(2) + "\n");
    if (passed) *passed = r.passed() ? 1 : 0;
    return GD_OK;
  });
}

}  // extern "C"
