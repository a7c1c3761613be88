// Exercises the shared library through its C header only.
#include "gdensity/gdensity.h"

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  gd_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("moduli") {
  gd_modulus* g = nullptr;
  REQUIRE(gd_modulus_parse("power:1/2", &g) == GD_OK);
  double v = 0;
  CHECK(gd_modulus_eval(g, "1/4", &v) == GD_OK);
  CHECK(v == doctest::Approx(0.5));
  CHECK(gd_modulus_eval(g, "-1", &v) == GD_ERR_DOMAIN);
  CHECK(std::string(gd_last_error()).size() > 0);
  char* name = nullptr;
  CHECK(gd_modulus_name(g, &name) == GD_OK);
  CHECK(take(name) == "power:1/2");
  gd_modulus_free(g);
  CHECK(gd_modulus_parse("cubic", &g) == GD_ERR_PARSE);
  CHECK(gd_modulus_parse(nullptr, &g) == GD_ERR_INVALID_ARGUMENT);
}

TEST_CASE("sets") {
  gd_set* s = nullptr;
  REQUIRE(gd_set_parse("(0,1)u(2,3)-{1/2}", &s) == GD_OK);
  int in = -1;
  CHECK(gd_set_contains(s, "1/2", &in) == GD_OK);
  CHECK(in == 0);
  CHECK(gd_set_contains(s, "5/2", &in) == GD_OK);
  CHECK(in == 1);
  char* m = nullptr;
  CHECK(gd_set_measure_within(s, "0", "5/2", &m) == GD_OK);
  CHECK(take(m) == "3/2");
  char* j = nullptr;
  CHECK(gd_set_describe(s, &j) == GD_OK);
  CHECK(take(j).find("removed") != std::string::npos);
  gd_set_free(s);
  CHECK(gd_set_parse("(0,", &s) == GD_ERR_PARSE);
}

TEST_CASE("traces and verdicts") {
  gd_modulus* g = nullptr;
  gd_set* s = nullptr;
  REQUIRE(gd_modulus_parse("log", &g) == GD_OK);
  REQUIRE(gd_set_parse("dyadic-gap", &s) == GD_OK);
  char* out = nullptr;
  CHECK(gd_trace(g, s, "0", "csv", R"({"K": 12})", &out) == GD_OK);
  const std::string csv = take(out);
  CHECK(csv.rfind("k,alpha_num", 0) == 0);
  CHECK(gd_trace(g, s, "0", "svg", nullptr, &out) == GD_OK);
  CHECK(take(out).find("<svg") != std::string::npos);
  CHECK(gd_trace(g, s, "0", "pdf", nullptr, &out) == GD_ERR_PARSE);
  CHECK(gd_trace(g, s, "1", "csv", nullptr, &out) == GD_ERR_DOMAIN);
  CHECK(gd_trace(g, s, "0", "csv", "{\"K\": 0}", &out) == GD_ERR_DOMAIN);
  CHECK(gd_trace(g, s, "0", "csv", "[", &out) == GD_ERR_PARSE);
  CHECK(gd_classify(g, s, "0", nullptr, &out) == GD_OK);
  CHECK(take(out).find("\"Neither\"") != std::string::npos);
  CHECK(gd_open(g, s, nullptr, &out) == GD_OK);
  CHECK(take(out).find("\"NotOpen\"") != std::string::npos);
  gd_set_free(s);
  gd_modulus_free(g);
}

TEST_CASE("condition (A) and axioms") {
  gd_modulus* g = nullptr;
  REQUIRE(gd_modulus_parse("log", &g) == GD_OK);
  char* out = nullptr;
  CHECK(gd_condition_a(g, 0.5, &out) == GD_OK);
  CHECK(take(out).find("refutation") != std::string::npos);
  CHECK(gd_condition_a(g, 2.0, &out) == GD_ERR_DOMAIN);
  int passed = 0;
  CHECK(gd_validate_modulus(g, &out, &passed) == GD_OK);
  gd_string_free(out);
  CHECK(passed == 1);
  gd_modulus_free(g);
}

TEST_CASE("approximate continuity") {
  gd_function* f = nullptr;
  REQUIRE(gd_function_parse(R"({"special": "bump_sum", "n_max": 20})", &f) == GD_OK);
  char* v = nullptr;
  CHECK(gd_function_eval(f, "33/512", &v) == GD_OK);
  CHECK(take(v) == "3");
  gd_set* w = nullptr;
  gd_modulus* g = nullptr;
  REQUIRE(gd_set_parse("bump-support", &w) == GD_OK);
  REQUIRE(gd_modulus_parse("identity", &g) == GD_OK);
  char* out = nullptr;
  CHECK(gd_approx_continuity(f, w, "0", g, nullptr, &out) == GD_OK);
  CHECK(take(out).find("\"overall\": \"yes\"") != std::string::npos);
  gd_set_free(w);
  // the supports themselves are a witness along which f is unbounded
  REQUIRE(gd_set_parse("complement:bump-support", &w) == GD_OK);
  CHECK(gd_approx_continuity(f, w, "0", g, nullptr, &out) == GD_OK);
  CHECK(take(out).find("\"overall\": \"no\"") != std::string::npos);
  gd_modulus_free(g);
  gd_set_free(w);
  gd_function_free(f);
  CHECK(gd_function_parse("{", &f) == GD_ERR_PARSE);
}

TEST_CASE("reproductions and verify") {
  char* out = nullptr;
  int passed = 0;
  CHECK(gd_reproduce("ex28", &out, &passed) == GD_OK);
  gd_string_free(out);
  CHECK(passed == 1);
  CHECK(gd_reproduce("ex99", &out, &passed) == GD_ERR_PARSE);
  CHECK(gd_verify("interval", 3, R"({"pairs": 20})", &out, &passed) == GD_OK);
  const std::string report = take(out);
  CHECK(passed == 1);
  CHECK(report.find("\"seed\": 3") != std::string::npos);
  CHECK(gd_verify("interval", 3, R"({"pairs": 0})", &out, &passed) == GD_ERR_DOMAIN);
}
