// Reproductions of the three worked examples as machine-readable reports.
#pragma once

#include "gdensity/serialize.hpp"

#include <string>
#include <vector>

namespace gdensity {

/// The Log/DyadicGap ratio trace at 0 for h = 2^-k, k = 10..60, with the exact sandwich
/// h^2/4 <= m(h) <= 4h^2 and the resulting verdicts.
Json reproduce_dyadic_gap();
/// Openness of U (DyadicGap kernel at 0, construction endpoints removed) for every catalog modulus.
Json reproduce_open_set();
/// BumpSum with n_max = 50: exact peaks, sup norms, the quadratic witness bound, check_point at 0.
Json reproduce_bump(long n_max = 50);

/// "ex17", "ex28" or "bump"; ParseError otherwise. Every report carries "passed".
Json reproduce(const std::string& id);
std::vector<std::string> reproduction_ids();

}  // namespace gdensity
