// Command-line front end over the C API.
#include "gdensity/gdensity.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

namespace {

using Json = nlohmann::json;

enum Exit { kPass = 0, kPropertyFailure = 1, kUsage = 2, kDomain = 3 };

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_for(gd_status s) {
  switch (s) {
    case GD_OK: return kPass;
    case GD_ERR_INVALID_ARGUMENT:
    case GD_ERR_PARSE: return kUsage;
    default: return kDomain;
  }
}

struct Owned {
  char* p = nullptr;
  ~Owned() { gd_string_free(p); }
};

struct ModulusHandle {
  gd_modulus* p = nullptr;
  ~ModulusHandle() { gd_modulus_free(p); }
};
struct SetHandle {
  gd_set* p = nullptr;
  ~SetHandle() { gd_set_free(p); }
};
struct FunctionHandle {
  gd_function* p = nullptr;
  ~FunctionHandle() { gd_function_free(p); }
};

struct Failure {
  gd_status status;
};

void ok(gd_status s) {
  if (s != GD_OK) throw Failure{s};
}

// Options shared by every subcommand.
struct Common {
  std::string config_path;
  std::string out_path;
  Json config = Json::object();

  void load() {
    if (config_path.empty()) return;
    std::ifstream in(config_path);
    if (!in) throw Usage("cannot read config file '" + config_path + "'");
    try {
      config = Json::parse(in);
    } catch (const Json::exception& e) {
      throw Usage(std::string("config file: ") + e.what());
    }
    if (!config.is_object()) throw Usage("config file must hold a JSON object");
  }

  // Flag value when given, else the config key, else the default.
  std::string pick(const std::string& flag, const char* key, const std::string& fallback = {}) const {
    if (!flag.empty()) return flag;
    if (config.contains(key)) {
      const auto& v = config[key];
      return v.is_string() ? v.get<std::string>() : v.dump();
    }
    return fallback;
  }

  void emit(const std::string& text) const {
    if (out_path.empty()) {
      std::cout << text;
      if (!text.empty() && text.back() != '\n') std::cout << '\n';
      return;
    }
    // write to a sibling file, then rename over the target
    const std::string tmp = out_path + ".tmp";
    {
      std::ofstream f(tmp, std::ios::binary);
      if (!f) throw Usage("cannot write '" + out_path + "'");
      f << text;
    }
    std::filesystem::rename(tmp, out_path);
  }
};

std::string options_json(const Common& c, const Json& extra = Json::object()) {
  Json o = Json::object();
  for (const char* k : {"alpha0", "q", "K", "W", "tol", "theta", "theta_limsup", "side", "measured", "pairs", "points",
                        "translations", "function_pairs"})
    if (c.config.contains(k)) o[k] = c.config[k];
  for (auto it = extra.begin(); it != extra.end(); ++it) o[it.key()] = it.value();
  return o.dump();
}

void require(const std::string& v, const char* what) {
  if (v.empty()) throw Usage(std::string("missing --") + what);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Density points relative to a modulus function: traces, verdicts, topology checks."};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(gd_version()));

  Common common;
  std::string modulus, set, point, side, format, witness, function, id, suite;
  std::string measured;
  double epsilon = 0;
  std::optional<std::uint64_t> seed;
  std::optional<int> K, W;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", common.config_path, "JSON file with defaults and grid/policy overrides");
    sub->add_option("--out", common.out_path, "Write the output to a file instead of stdout");
  };
  auto add_grid = [&](CLI::App* sub) {
    sub->add_option("--K", K, "Number of grid scales");
    sub->add_option("--W", W, "Stabilization window");
  };

  auto* trace = app.add_subcommand("trace", "Ratio trace of a set at a point");
  trace->add_option("--modulus", modulus, "identity, power:p, bounded, log, psi:...");
  trace->add_option("--set", set, "Set spec");
  trace->add_option("--point", point, "Rational point");
  trace->add_option("--side", side, "both, left or right");
  trace->add_option("--measured", measured, "complement (default) or set");
  trace->add_option("--format", format, "csv, json, ascii or svg")->check(CLI::IsMember({"csv", "json", "ascii", "svg"}));
  add_common(trace);
  add_grid(trace);

  auto* classify = app.add_subcommand("classify", "Density / dispersion verdict at a point");
  classify->add_option("--modulus", modulus);
  classify->add_option("--set", set);
  classify->add_option("--point", point);
  add_common(classify);
  add_grid(classify);

  auto* cond = app.add_subcommand("condition-a", "Condition (A) certificate or refutation evidence");
  cond->add_option("--modulus", modulus);
  cond->add_option("--epsilon", epsilon, "epsilon in (0,1)");
  add_common(cond);

  auto* validate = app.add_subcommand("validate-modulus", "Check the modulus axioms on a geometric grid");
  validate->add_option("--modulus", modulus);
  add_common(validate);

  auto* open = app.add_subcommand("open", "Whether a set is open in the density topology of a modulus");
  open->add_option("--modulus", modulus);
  open->add_option("--set", set);
  add_common(open);
  add_grid(open);

  auto* approx = app.add_subcommand("approx", "Approximate continuity of a function at a point");
  approx->add_option("--modulus", modulus);
  approx->add_option("--function", function, "JSON function spec, or @file");
  approx->add_option("--witness", witness, "Witness set spec");
  approx->add_option("--point", point);
  add_common(approx);
  add_grid(approx);

  auto* repro = app.add_subcommand("reproduce", "Reproduce a worked example: ex17, ex28 or bump");
  repro->add_option("id", id)->required()->check(CLI::IsMember({"ex17", "ex28", "bump"}));
  add_common(repro);

  auto* verify = app.add_subcommand("verify", "Run the property suites");
  verify->add_option("--suite", suite, "interval, families, modulus, density, criteria, coincidence, topology, approx or all")
      ->check(CLI::IsMember({"interval", "families", "modulus", "density", "criteria", "coincidence", "topology", "approx", "all"}));
  verify->add_option("--seed", seed, "Seed for the random corpora");
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    common.load();
    Json extra = Json::object();
    if (K) extra["K"] = *K;
    if (W) extra["W"] = *W;
    auto modulus_handle = [&](ModulusHandle& h) {
      const std::string spec = common.pick(modulus, "modulus", "identity");
      ok(gd_modulus_parse(spec.c_str(), &h.p));
    };
    auto set_handle = [&](SetHandle& h, const std::string& flag, const char* key) {
      const std::string spec = common.pick(flag, key);
      require(spec, key);
      ok(gd_set_parse(spec.c_str(), &h.p));
    };
    Owned out;
    int code = kPass;

    if (*trace) {
      ModulusHandle g;
      SetHandle s;
      modulus_handle(g);
      set_handle(s, set, "set");
      const std::string x = common.pick(point, "point", "0");
      if (!side.empty()) extra["side"] = side;
      if (!measured.empty()) extra["measured"] = measured;
      const std::string fmt = common.pick(format, "format", "csv");
      ok(gd_trace(g.p, s.p, x.c_str(), fmt.c_str(), options_json(common, extra).c_str(), &out.p));
    } else if (*classify) {
      ModulusHandle g;
      SetHandle s;
      modulus_handle(g);
      set_handle(s, set, "set");
      const std::string x = common.pick(point, "point", "0");
      ok(gd_classify(g.p, s.p, x.c_str(), options_json(common, extra).c_str(), &out.p));
    } else if (*cond) {
      ModulusHandle g;
      modulus_handle(g);
      double eps = epsilon;
      if (cond->count("--epsilon") == 0) eps = common.config.value("epsilon", 0.5);
      ok(gd_condition_a(g.p, eps, &out.p));
    } else if (*validate) {
      ModulusHandle g;
      modulus_handle(g);
      int passed = 0;
      ok(gd_validate_modulus(g.p, &out.p, &passed));
      if (!passed) code = kPropertyFailure;
    } else if (*open) {
      ModulusHandle g;
      SetHandle s;
      modulus_handle(g);
      set_handle(s, set, "set");
      ok(gd_open(g.p, s.p, options_json(common, extra).c_str(), &out.p));
    } else if (*approx) {
      ModulusHandle g;
      SetHandle w;
      FunctionHandle f;
      modulus_handle(g);
      set_handle(w, witness, "witness");
      std::string spec = common.pick(function, "function");
      require(spec, "function");
      if (spec.front() == '@') {
        std::ifstream in(spec.substr(1));
        if (!in) throw Usage("cannot read '" + spec.substr(1) + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        spec = ss.str();
      }
      ok(gd_function_parse(spec.c_str(), &f.p));
      const std::string x = common.pick(point, "point", "0");
      ok(gd_approx_continuity(f.p, w.p, x.c_str(), g.p, options_json(common, extra).c_str(), &out.p));
    } else if (*repro) {
      int passed = 0;
      ok(gd_reproduce(id.c_str(), &out.p, &passed));
      if (!passed) code = kPropertyFailure;
    } else if (*verify) {
      const std::string name = common.pick(suite, "suite", "all");
      std::uint64_t s = 42;
      if (seed) s = *seed;
      else if (common.config.contains("seed")) s = common.config["seed"].get<std::uint64_t>();
      int passed = 0;
      ok(gd_verify(name.c_str(), s, options_json(common).c_str(), &out.p, &passed));
      if (!passed) code = kPropertyFailure;
    }
    common.emit(out.p ? out.p : "");
    return code;
  } catch (const Failure& f) {
    std::cerr << "error: " << gd_last_error() << '\n';
    return exit_for(f.status);
  } catch (const Usage& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
