// Compares a reproduction report with its golden file; floats within the embedded tolerances.
#include "gdensity/gdensity.h"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <string>

using Json = nlohmann::json;

namespace {

struct Tolerance {
  double abs = 0;
  double rel = 0;
};

bool same(const Json& want, const Json& got, const Tolerance& tol, const std::string& path, std::string& why) {
  if (want.is_number_float() || got.is_number_float()) {
    if (!want.is_number() || !got.is_number()) {
      why = path + ": type differs";
      return false;
    }
    const double w = want.get<double>(), g = got.get<double>();
    if (std::abs(w - g) > tol.abs + tol.rel * std::abs(w)) {
      why = path + ": " + std::to_string(g) + " vs golden " + std::to_string(w);
      return false;
    }
    return true;
  }
  if (want.type() != got.type()) {
    why = path + ": type differs";
    return false;
  }
  if (want.is_object()) {
    if (want.size() != got.size()) {
      why = path + ": key sets differ";
      return false;
    }
    for (auto it = want.begin(); it != want.end(); ++it) {
      if (!got.contains(it.key())) {
        why = path + "/" + it.key() + ": missing";
        return false;
      }
      if (!same(it.value(), got[it.key()], tol, path + "/" + it.key(), why)) return false;
    }
    return true;
  }
  if (want.is_array()) {
    if (want.size() != got.size()) {
      why = path + ": lengths differ";
      return false;
    }
    for (std::size_t i = 0; i < want.size(); ++i)
      if (!same(want[i], got[i], tol, path + "/" + std::to_string(i), why)) return false;
    return true;
  }
  if (want != got) {
    why = path + ": " + got.dump() + " vs golden " + want.dump();
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: golden_check <id> <golden.json> [--write]\n";
    return 2;
  }
  const std::string id = argv[1], path = argv[2];
  const bool write = argc > 3 && std::string(argv[3]) == "--write";
  char* out = nullptr;
  int passed = 0;
  if (gd_reproduce(id.c_str(), &out, &passed) != GD_OK) {
    std::cerr << "reproduce failed: " << gd_last_error() << '\n';
    return 3;
  }
  const Json got = Json::parse(out);
  gd_string_free(out);
  if (write) {
    const Json golden{{"id", id}, {"tolerance", {{"abs", 1e-12}, {"rel", 1e-9}}}, {"expected", got}};
    std::ofstream(path) << golden.dump(2) << '\n';
    return 0;
  }
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot read " << path << '\n';
    return 2;
  }
  const Json golden = Json::parse(in);
  const Tolerance tol{golden["tolerance"]["abs"].get<double>(), golden["tolerance"]["rel"].get<double>()};
  std::string why;
  if (!same(golden["expected"], got, tol, "", why)) {
    std::cerr << id << " differs from golden: " << why << '\n';
    return 1;
  }
  if (!passed) {
    std::cerr << id << " report does not pass\n";
    return 1;
  }
  std::cout << id << " matches golden\n";
  return 0;
}
