// Seeded property suites over random corpora, with machine-readable reports.
#pragma once

#include "gdensity/serialize.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gdensity {

struct PropertyResult {
  std::string suite;
  std::string name;
  long checked = 0;
  long failures = 0;
  std::string first_failure;

  bool passed() const { return failures == 0 && checked > 0; }
  void check(bool ok, const std::string& what);
  template <class Describe>
  void check_lazy(bool ok, Describe&& describe) {
    ++checked;
    if (!ok && failures++ == 0) first_failure = describe();
  }
};

struct VerifyOptions {
  int pairs = 500;          // random pairs of interval unions
  int points = 10;          // sampled points per pair
  int translations = 20;    // random shifts per pair
  int function_pairs = 100; // random pairs of witnessed functions
};

struct VerifyReport {
  std::string suite;
  std::uint64_t seed = 0;
  GridSpec grid;
  Policy policy;
  VerifyOptions options;
  std::vector<PropertyResult> properties;

  bool passed() const;
  const PropertyResult* find(const std::string& name) const;
  /// Deterministic: no timestamps, keys sorted.
  Json json() const;
};

/// interval, families, modulus, density, criteria, coincidence, topology, approx, all.
std::vector<std::string> verify_suites();
/// ParseError for an unknown suite.
VerifyReport run_verify(const std::string& suite, std::uint64_t seed, const GridSpec& grid = {},
                        const Policy& policy = {}, const VerifyOptions& options = {});

}  // namespace gdensity
