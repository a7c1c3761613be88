#include "gdensity/serialize.hpp"

#include <cctype>
#include <iomanip>
#include <limits>
#include <sstream>

namespace gdensity {

namespace {

Json integer_json(const Integer& z) {
  if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(z);
  return z.str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    const Rational q = parse_rational(j.get<std::string>());
    if (denominator(q) != 1) throw ParseError("expected an integer, got " + j.get<std::string>());
    return numerator(q);
  }
  throw ParseError("expected an integer in JSON, got " + j.dump());
}

std::string trim(std::string s) {
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

ExtRational parse_ext(const std::string& s) {
  if (s == "inf" || s == "+inf") return ExtRational::pos_inf();
  if (s == "-inf") return ExtRational::neg_inf();
  return parse_rational(s);
}

std::vector<Rational> parse_point_list(const std::string& body) {
  std::vector<Rational> out;
  if (body.empty()) return out;
  for (const auto& p : split(body, ',')) out.push_back(parse_rational(p));
  return out;
}

Rational anchor_of(const std::string& spec, std::size_t at) {
  return at == std::string::npos ? Rational(0) : parse_rational(spec.substr(at + 1));
}

long count_of(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) return 0;
  const Rational n = parse_rational(spec.substr(colon + 1));
  if (denominator(n) != 1 || n < 0 || n > 1000000000) throw ParseError("bad count in '" + spec + "'");
  return static_cast<long>(numerator(n));
}

RepresentableSet complement_of(const RepresentableSet& a) {
  if (!a.added().empty() || !a.removed().empty() || !a.added_families().empty() || !a.removed_families().empty())
    throw DomainError("complement: specs are limited to sets without point modifications");
  return RepresentableSet(a.kernel().complement());
}

RepresentableSet parse_interval_expr(const std::string& s) {
  std::size_t i = 0;
  std::vector<std::pair<ExtRational, ExtRational>> raw;
  while (i < s.size() && s[i] == '(') {
    const auto close = s.find(')', i);
    if (close == std::string::npos) throw ParseError("unclosed interval in '" + s + "'");
    const auto parts = split(s.substr(i + 1, close - i - 1), ',');
    if (parts.size() != 2) throw ParseError("interval needs two endpoints in '" + s + "'");
    raw.emplace_back(parse_ext(parts[0]), parse_ext(parts[1]));
    i = close + 1;
    if (i < s.size() && (s[i] == 'u' || s[i] == 'U')) {
      ++i;
      if (i >= s.size() || s[i] != '(') throw ParseError("expected interval after union in '" + s + "'");
    }
  }
  std::vector<Interval> ivs;
  for (const auto& [lo, hi] : raw) ivs.push_back({lo, hi});
  RepresentableSet out(RationalIntervalSet::normalize(ivs));
  for (const auto& a : raw)
    for (const auto& b : raw)
      if (a.second.is_finite() && a.second == b.first) out.remove(a.second.value());
  while (i < s.size()) {
    const char op = s[i];
    if ((op != '+' && op != '-') || i + 1 >= s.size() || s[i + 1] != '{')
      throw ParseError("unexpected text in set spec '" + s + "'");
    const auto close = s.find('}', i);
    if (close == std::string::npos) throw ParseError("unclosed point list in '" + s + "'");
    for (const auto& x : parse_point_list(s.substr(i + 2, close - i - 2))) {
      if (op == '+') out.add(x);
      else out.remove(x);
    }
    i = close + 1;
  }
  return out;
}

CountableFamily family_from_json(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "reciprocals") return CountableFamily::reciprocals(j.value("count", 0L));
  if (kind == "rationals_in") return CountableFamily::rationals_in(rational_from_json(j.at("lo")), rational_from_json(j.at("hi")));
  if (kind == "construction_endpoints")
    return CountableFamily::construction_endpoints(family_kind_from_string(j.at("construction").get<std::string>()),
                                                   j.contains("anchor") ? rational_from_json(j.at("anchor")) : Rational(0));
  throw ParseError("unknown countable family '" + kind + "'");
}

}  // namespace

Json rational_json(const Rational& q) { return Json::array({integer_json(numerator(q)), integer_json(denominator(q))}); }

Rational rational_from_json(const Json& j) {
  if (j.is_array()) {
    if (j.size() != 2) throw ParseError("rational array needs [num, den]");
    const Integer den = integer_from_json(j[1]);
    if (den == 0) throw ParseError("zero denominator");
    return Rational(integer_from_json(j[0]), den);
  }
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_number_float()) {
    std::ostringstream os;
    os << std::setprecision(17) << j.get<double>();
    return parse_rational(os.str());
  }
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError("expected a rational in JSON, got " + j.dump());
}

Json ext_json(const ExtRational& x) {
  if (!x.is_finite()) return x.infinity_sign() > 0 ? "inf" : "-inf";
  return rational_json(x.value());
}

ExtRational ext_from_json(const Json& j) {
  if (j.is_string()) return parse_ext(trim(j.get<std::string>()));
  return rational_from_json(j);
}

Json set_json(const RationalIntervalSet& s) {
  Json arr = Json::array();
  for (const auto& iv : s.intervals()) arr.push_back(Json::array({ext_json(iv.lo), ext_json(iv.hi)}));
  return {{"intervals", arr}, {"unbounded_left", s.unbounded_left()}, {"unbounded_right", s.unbounded_right()}};
}

Json target_json(const Target& t) {
  if (const auto* s = t.interval_set()) return set_json(*s);
  const auto& f = *t.family();
  Json j{{"family", {{"kind", to_string(f.kind())}, {"anchor", rational_json(f.anchor())}}}};
  j["in_construction"] = set_json(f.in_construction());
  j["outside_construction"] = set_json(f.outside_construction());
  return j;
}

Json family_json(const CountableFamily& f) {
  switch (f.kind) {
    case CountableFamily::Kind::Reciprocals: return {{"kind", "reciprocals"}, {"count", f.count}};
    case CountableFamily::Kind::RationalsIn:
      return {{"kind", "rationals_in"}, {"lo", rational_json(f.lo)}, {"hi", rational_json(f.hi)}};
    case CountableFamily::Kind::ConstructionEndpoints:
      return {{"kind", "construction_endpoints"}, {"construction", to_string(f.construction)},
              {"anchor", rational_json(f.anchor)}};
  }
  return {};
}

Json representable_json(const RepresentableSet& a) {
  Json j{{"kernel", target_json(a.kernel())}};
  Json added = Json::array(), removed = Json::array(), af = Json::array(), rf = Json::array();
  for (const auto& x : a.added()) added.push_back(rational_json(x));
  for (const auto& x : a.removed()) removed.push_back(rational_json(x));
  for (const auto& f : a.added_families()) af.push_back(family_json(f));
  for (const auto& f : a.removed_families()) rf.push_back(family_json(f));
  j["added"] = added;
  j["removed"] = removed;
  j["added_families"] = af;
  j["removed_families"] = rf;
  return j;
}

RepresentableSet set_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("set JSON must be an object");
  std::optional<RepresentableSet> out;
  if (j.contains("family")) {
    const auto& f = j.at("family");
    const auto kind = family_kind_from_string(f.at("kind").get<std::string>());
    const Rational anchor = f.contains("anchor") ? rational_from_json(f.at("anchor")) : Rational(0);
    ScaleFamily fam = kind == FamilyKind::DyadicGap ? ScaleFamily::dyadic_gap(anchor) : ScaleFamily::bump_support(anchor);
    if (f.value("complement", false)) fam = fam.complement();
    out.emplace(fam);
  } else {
    std::vector<Interval> ivs;
    std::vector<std::pair<ExtRational, ExtRational>> raw;
    for (const auto& iv : j.value("intervals", Json::array())) {
      if (!iv.is_array() || iv.size() != 2) throw ParseError("interval must be [lo, hi]");
      raw.emplace_back(ext_from_json(iv[0]), ext_from_json(iv[1]));
      ivs.push_back({raw.back().first, raw.back().second});
    }
    out.emplace(RationalIntervalSet::normalize(ivs));
    for (const auto& a : raw)
      for (const auto& b : raw)
        if (a.second.is_finite() && a.second == b.first) out->remove(a.second.value());
  }
  for (const auto& x : j.value("added", Json::array())) out->add(rational_from_json(x));
  for (const auto& x : j.value("removed", Json::array())) out->remove(rational_from_json(x));
  for (const auto& f : j.value("added_families", Json::array())) out->add(family_from_json(f));
  for (const auto& f : j.value("removed_families", Json::array())) out->remove(family_from_json(f));
  return *out;
}

RepresentableSet parse_set_spec(const std::string& raw_spec) {
  const std::string spec = trim(raw_spec);
  if (spec.empty()) throw ParseError("empty set spec");
  if (spec[0] == '{') {
    Json j;
    try {
      j = Json::parse(spec);
    } catch (const Json::exception& e) {
      throw ParseError(std::string("set JSON: ") + e.what());
    }
    try {
      return set_from_json(j);
    } catch (const Json::exception& e) {
      throw ParseError(std::string("set JSON: ") + e.what());
    }
  }
  if (spec.rfind("complement:", 0) == 0) return complement_of(parse_set_spec(spec.substr(11)));
  if (spec == "empty") return RepresentableSet(RationalIntervalSet::empty());
  if (spec == "reals" || spec == "R") return RepresentableSet(RationalIntervalSet::real_line());
  const auto at = spec.find('@');
  const std::string name = spec.substr(0, at);
  if (name == "dyadic-gap" || name == "dyadic_gap") return RepresentableSet(ScaleFamily::dyadic_gap(anchor_of(spec, at)));
  if (name == "bump-support" || name == "bump_support")
    return RepresentableSet(ScaleFamily::bump_support(anchor_of(spec, at)));
  if (name == "dyadic-gap-u" || name == "U") return RepresentableSet::dyadic_gap_density_set(anchor_of(spec, at));
  const std::string head = spec.substr(0, spec.find(':'));
  if (head == "reciprocals") return RepresentableSet::null_set({}, {CountableFamily::reciprocals(count_of(spec))});
  if (head == "complement-reciprocals") {
    RepresentableSet s(RationalIntervalSet::real_line());
    s.remove(CountableFamily::reciprocals(count_of(spec)));
    return s;
  }
  if (spec[0] == '(') return parse_interval_expr(spec);
  throw ParseError("unknown set spec '" + spec + "'");
}

PiecewisePoly piecewise_from_json(const Json& j) {
  try {
    PiecewisePoly p;
    for (const auto& piece : j.at("pieces")) {
      Piece q{ext_from_json(piece.at("lo")), ext_from_json(piece.at("hi")), {}};
      for (const auto& c : piece.at("poly")) q.poly.push_back(rational_from_json(c));
      p.pieces.push_back(std::move(q));
    }
    for (const auto& pv : j.value("points", Json::array())) {
      if (!pv.is_array() || pv.size() != 2) throw ParseError("point value must be [x, v]");
      p.point_values[rational_from_json(pv[0])] = rational_from_json(pv[1]);
    }
    p.validate();
    return p;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("function JSON: ") + e.what());
  }
}

Function function_from_json(const Json& j) {
  if (j.contains("special")) {
    if (j.at("special") != "bump_sum") throw ParseError("unknown special function " + j.at("special").dump());
    if (!j.contains("n_max") || !j.at("n_max").is_number_integer()) throw ParseError("bump_sum needs integer n_max");
    return Function::bump_sum(j.at("n_max").get<long>(),
                              j.contains("anchor") ? rational_from_json(j.at("anchor")) : Rational(0));
  }
  return Function::piecewise(piecewise_from_json(j));
}

Json grid_json(const GridSpec& g) { return {{"alpha0", rational_json(g.alpha0)}, {"q", rational_json(g.q)}, {"K", g.K}}; }

Json policy_json(const Policy& p) {
  return {{"W", p.window}, {"tol", p.tol}, {"theta", p.theta}, {"theta_limsup", p.theta_limsup}};
}

void apply_overrides(const Json& j, GridSpec& grid, Policy& policy) {
  if (!j.is_object()) throw ParseError("config must be a JSON object");
  try {
    if (j.contains("alpha0")) grid.alpha0 = rational_from_json(j.at("alpha0"));
    if (j.contains("q")) grid.q = rational_from_json(j.at("q"));
    if (j.contains("K")) grid.K = j.at("K").get<long>();
    if (j.contains("W")) policy.window = j.at("W").get<int>();
    if (j.contains("tol")) policy.tol = j.at("tol").get<double>();
    if (j.contains("theta")) policy.theta = j.at("theta").get<double>();
    if (j.contains("theta_limsup")) policy.theta_limsup = j.at("theta_limsup").get<double>();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("config: ") + e.what());
  }
}

double to_double(const Real& r) { return static_cast<double>(r); }

std::string trace_csv(const RatioTrace& t) {
  std::ostringstream os;
  os << "k,alpha_num,alpha_den,measure_num,measure_den,ratio\n";
  for (std::size_t k = 0; k < t.scales.size(); ++k) {
    os << k << ',' << numerator(t.scales[k]) << ',' << denominator(t.scales[k]) << ',' << numerator(t.measures[k])
       << ',' << denominator(t.measures[k]) << ',' << std::setprecision(17) << to_double(t.ratios[k]) << '\n';
  }
  return os.str();
}

Json trace_json(const RatioTrace& t) {
  Json rows = Json::array();
  for (std::size_t k = 0; k < t.scales.size(); ++k)
    rows.push_back({{"k", k}, {"alpha", rational_json(t.scales[k])}, {"measure", rational_json(t.measures[k])},
                    {"ratio", to_double(t.ratios[k])}});
  return {{"side", to_string(t.side)},
          {"measured", t.measured == Measured::Set ? "set" : "complement"},
          {"truncated", t.truncated},
          {"rows", rows}};
}

Json verdict_json(const Verdict& v) {
  return {{"class", to_string(v.cls)},
          {"density", to_string(v.density)},
          {"dispersion", to_string(v.dispersion)},
          {"limit_estimate", v.limit_estimate},
          {"set_limit_estimate", v.set_limit_estimate},
          {"stabilization_window", v.stabilization_window},
          {"tolerance", v.tolerance},
          {"theta", v.theta},
          {"exact", v.exact},
          {"truncated", v.truncated}};
}

Json open_json(const OpenVerdict& v) {
  Json j{{"verdict", to_string(v.status)}, {"exact", v.exact}, {"reason", v.reason}, {"points_checked", v.points_checked}};
  j["witness"] = v.witness ? rational_json(*v.witness) : Json(nullptr);
  return j;
}

Json condition_a_json(const ConditionAResult& r) {
  Json j;
  switch (r.status) {
    case ConditionAStatus::Certificate: j["status"] = "certificate"; break;
    case ConditionAStatus::Refutation: j["status"] = "refutation"; break;
    case ConditionAStatus::Inconclusive: j["status"] = "inconclusive"; break;
  }
  j["grid"] = r.grid_description;
  j["grid_relative"] = r.grid_relative;
  if (r.certificate) {
    const auto& c = *r.certificate;
    j["certificate"] = {{"epsilon", c.epsilon},
                        {"c_epsilon", rational_json(c.c_epsilon)},
                        {"c_epsilon_value", to_double(to_real(c.c_epsilon))},
                        {"delta_epsilon", rational_json(c.delta_epsilon)},
                        {"max_observed_ratio", c.max_observed_ratio}};
  }
  if (r.refutation) {
    const auto& e = *r.refutation;
    Json cands = Json::array();
    for (const auto& c : e.candidates)
      cands.push_back({{"c", rational_json(c.c)}, {"ratio_at_finest", c.ratio_at_finest}, {"floor", c.floor}});
    j["refutation"] = {{"epsilon", e.epsilon},
                       {"finest_t_log2", -floor_log2(e.finest_t)},
                       {"min_ratio_at_finest", e.min_ratio_at_finest},
                       {"candidates", cands}};
  }
  return j;
}

Json validation_json(const ValidationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"worst", c.worst}, {"witness", c.witness}});
  return {{"passed", r.passed()},
          {"weakly_increasing", r.weakly_increasing},
          {"strictly_increasing", r.strictly_increasing},
          {"checks", checks}};
}

Json approx_json(const ApproxContinuityVerdict& v) {
  return {{"witness_density", verdict_json(v.witness_density)},
          {"along_limit", to_string(v.along)},
          {"overall", to_string(v.overall)},
          {"samples", v.samples.size()},
          {"max_tail_deviation", to_double(to_real(v.max_tail_deviation))}};
}

}  // namespace gdensity
