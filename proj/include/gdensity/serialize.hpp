// JSON and CSV encodings, and the textual set/function specs accepted by the CLI.
#pragma once

#include "gdensity/approx_continuity.hpp"

#include <json.hpp>

#include <string>

namespace gdensity {

using Json = nlohmann::json;

/// [num, den]; a component that does not fit in 64 bits is written as a decimal string.
Json rational_json(const Rational& q);
/// Accepts [num, den] (numbers or strings), a number, or a string "a/b", "0.25", "1e-3".
Rational rational_from_json(const Json& j);
Json ext_json(const ExtRational& x);  // "-inf" / "inf" or a rational
ExtRational ext_from_json(const Json& j);

Json set_json(const RationalIntervalSet& s);
Json target_json(const Target& t);
Json representable_json(const RepresentableSet& a);
Json family_json(const CountableFamily& f);

/// Set specs:
///   empty | reals | dyadic-gap[@a] | bump-support[@a] | dyadic-gap-u[@a]
///   reciprocals[:N] | complement-reciprocals[:N] | complement:<spec>
///   (a,b)u(c,d)...[+{x,...}][-{y,...}]    with inf / -inf allowed as endpoints
///   a JSON object {"intervals": [[lo, hi], ...] | "family": {...}, "added": [...], "removed": [...]}
/// ParseError on malformed input, DomainError on ill-formed intervals.
RepresentableSet parse_set_spec(const std::string& spec);
RepresentableSet set_from_json(const Json& j);

/// {"pieces": [{"lo", "hi", "poly": [c0, c1, ...]}, ...], "points": [[x, v], ...]}
/// or {"special": "bump_sum", "n_max": N}.
Function function_from_json(const Json& j);
PiecewisePoly piecewise_from_json(const Json& j);

Json grid_json(const GridSpec& g);
Json policy_json(const Policy& p);
/// Keys alpha0, q, K, W, tol, theta, theta_limsup; others are ignored.
void apply_overrides(const Json& j, GridSpec& grid, Policy& policy);

/// Columns k, alpha_num, alpha_den, measure_num, measure_den, ratio.
std::string trace_csv(const RatioTrace& t);
Json trace_json(const RatioTrace& t);
Json verdict_json(const Verdict& v);
Json open_json(const OpenVerdict& v);
Json condition_a_json(const ConditionAResult& r);
Json validation_json(const ValidationReport& r);
Json approx_json(const ApproxContinuityVerdict& v);

/// Shortest round-trip text of a double, used wherever reports print reals.
double to_double(const Real& r);

}  // namespace gdensity
