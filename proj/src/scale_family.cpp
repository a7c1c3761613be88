#include "gdensity/scale_family.hpp"

#include <algorithm>

namespace gdensity {

std::string to_string(FamilyKind kind) {
  return kind == FamilyKind::DyadicGap ? "dyadic_gap" : "bump_support";
}

FamilyKind family_kind_from_string(const std::string& name) {
  if (name == "dyadic_gap" || name == "dyadic-gap") return FamilyKind::DyadicGap;
  if (name == "bump_support" || name == "bump-support") return FamilyKind::BumpSupport;
  throw ParseError("unknown family kind '" + name + "'");
}

// ---------------------------------------------------------------- Construction

Rational Construction::length(long n) const {
  // dyadic: delta_n / 2 = (4^-n - 4^-(n+1)) / 2 = (3/8) 4^-n
  if (kind_ == FamilyKind::DyadicGap) return Rational(3, 8) * pow4(-n);
  return pow4(-(n + 1));
}

Rational Construction::tail(long n) const {
  if (kind_ == FamilyKind::DyadicGap) return pow4(-n) / 2;  // t_n^2 / 2
  return pow4(-n) / 3;
}

Rational Construction::validity_radius() const {
  return kind_ == FamilyKind::DyadicGap ? Rational(1, 2) : Rational(1, 4);
}

long Construction::first_index_below(const Rational& h) {
  if (h <= 0) throw DomainError("first_index_below needs h > 0");
  const long e = floor_log2(h);
  const long n = (pow2(e) == h) ? -e : -e - 1;
  return std::max(1L, n);
}

Rational Construction::cumulative(const Rational& h) const {
  if (h <= 0) return 0;
  const long k = first_index_below(h);
  Rational partial = h - offset(k);
  const Rational len = length(k);
  if (partial > len) partial = len;
  return tail(k + 1) + partial;
}

Rational Construction::measure_within(const Rational& lo, const Rational& hi) const {
  if (!(lo < hi)) return 0;
  Rational total = 0;
  if (hi > anchor_) {
    const Rational from = std::max(lo, anchor_) - anchor_;
    total += cumulative(hi - anchor_) - cumulative(from);
  }
  if (mirrored() && lo < anchor_) {
    const Rational to = anchor_ - std::min(hi, anchor_);
    total += cumulative(anchor_ - lo) - cumulative(to);
  }
  return total;
}

bool Construction::contains(const Rational& x) const {
  Rational d = x - anchor_;
  if (d == 0) return false;
  if (d < 0) {
    if (!mirrored()) return false;
    d = -d;
  }
  const long n = first_index_below(d);
  return d - offset(n) < length(n);
}

bool Construction::is_endpoint(const Rational& x) const {
  Rational d = x - anchor_;
  if (d == 0) return false;
  if (d < 0) {
    if (!mirrored()) return false;
    d = -d;
  }
  // left endpoints are offsets; right endpoints lie in (offset(n), offset(n-1))
  const long e = floor_log2(d);
  if (pow2(e) == d && -e - 1 >= 1) return true;
  const long n = first_index_below(d);
  return d == offset(n) + length(n);
}

std::pair<Rational, Rational> Construction::interval(long n) const {
  return {anchor_ + offset(n), anchor_ + offset(n) + length(n)};
}

RationalIntervalSet Construction::prefix(long depth) const {
  if (depth < 1) throw DomainError("truncation depth must be >= 1");
  std::vector<Interval> raw;
  for (long n = 1; n <= depth; ++n) {
    const auto [lo, hi] = interval(n);
    raw.push_back({lo, hi});
    if (mirrored()) raw.push_back({Rational(2 * anchor_ - hi), Rational(2 * anchor_ - lo)});
  }
  return RationalIntervalSet::normalize(std::move(raw));
}

RationalIntervalSet Construction::localize(const Rational& lo, const Rational& hi) const {
  if (!(lo < hi)) return {};
  if (lo <= anchor_ && anchor_ <= hi) throw DomainError("localize window must avoid the anchor");
  const bool right = lo > anchor_;
  if (!right && !mirrored()) return {};
  // distances from the anchor
  const Rational u = right ? Rational(lo - anchor_) : Rational(anchor_ - hi);
  const Rational v = right ? Rational(hi - anchor_) : Rational(anchor_ - lo);
  const long first = first_index_below(v);
  const long last = first_index_below(u) + 1;
  std::vector<Interval> raw;
  for (long n = first; n <= last; ++n) {
    const Rational a = offset(n), b = offset(n) + length(n);
    if (right) raw.push_back({anchor_ + a, anchor_ + b});
    else raw.push_back({Rational(anchor_ - b), Rational(anchor_ - a)});
  }
  return RationalIntervalSet::normalize(std::move(raw)).intersect(RationalIntervalSet::interval(lo, hi));
}

// ---------------------------------------------------------------- ScaleFamily

ScaleFamily ScaleFamily::dyadic_gap(const Rational& anchor) {
  return ScaleFamily(Construction(FamilyKind::DyadicGap, anchor), {}, RationalIntervalSet::real_line());
}

ScaleFamily ScaleFamily::bump_support(const Rational& anchor) {
  return ScaleFamily(Construction(FamilyKind::BumpSupport, anchor), {}, RationalIntervalSet::real_line());
}

ScaleFamily ScaleFamily::from_parts(Construction c, RationalIntervalSet in_construction,
                                    RationalIntervalSet outside) {
  return ScaleFamily(std::move(c), std::move(in_construction), std::move(outside));
}

bool ScaleFamily::is_base() const {
  return inside_.is_empty() && outside_ == RationalIntervalSet::real_line();
}

ScaleFamily ScaleFamily::complement() const {
  return ScaleFamily(construction_, inside_.complement(), outside_.complement());
}

ScaleFamily ScaleFamily::union_with(const RationalIntervalSet& e) const {
  return ScaleFamily(construction_, inside_.unite(e), outside_.unite(e));
}

ScaleFamily ScaleFamily::intersect_with(const RationalIntervalSet& e) const {
  return ScaleFamily(construction_, inside_.intersect(e), outside_.intersect(e));
}

ScaleFamily ScaleFamily::intersect(const ScaleFamily& other) const {
  if (!(construction_ == other.construction_)) throw DomainError("families on different constructions");
  return ScaleFamily(construction_, inside_.intersect(other.inside_), outside_.intersect(other.outside_));
}

ScaleFamily ScaleFamily::unite(const ScaleFamily& other) const {
  if (!(construction_ == other.construction_)) throw DomainError("families on different constructions");
  return ScaleFamily(construction_, inside_.unite(other.inside_), outside_.unite(other.outside_));
}

ScaleFamily ScaleFamily::translate(const Rational& z) const {
  return ScaleFamily(Construction(kind(), anchor() + z), inside_.translate(z), outside_.translate(z));
}

bool ScaleFamily::contains(const Rational& x) const {
  return construction_.contains(x) ? inside_.contains(x) : outside_.contains(x);
}

Rational ScaleFamily::construction_measure(const RationalIntervalSet& window_part) const {
  Rational total = 0;
  for (const auto& iv : window_part.intervals()) total += construction_.measure_within(iv.lo.value(), iv.hi.value());
  return total;
}

Rational ScaleFamily::measure_within(const Rational& lo, const Rational& hi) const {
  if (!(lo < hi)) return 0;
  const auto window = RationalIntervalSet::interval(lo, hi);
  const auto p = inside_.intersect(window);
  const auto q = outside_.intersect(window);
  // |G ∩ P ∩ F| + |G ∩ Q| - |G ∩ Q ∩ F|
  return construction_measure(p) + q.measure() - construction_measure(q);
}

Rational ScaleFamily::trace_measure(const Rational& x, const Rational& h, Side side) const {
  if (h <= 0) throw DomainError("trace radius must be positive");
  switch (side) {
    case Side::Left: return measure_within(x - h, x);
    case Side::Right: return measure_within(x, x + h);
    case Side::Both: break;
  }
  return measure_within(x - h, x + h);
}

Rational ScaleFamily::complement_trace_measure(const Rational& h) const {
  if (h <= 0 || h > validity_radius())
    throw DomainError("h outside the family validity radius (0, " + to_string(validity_radius()) + "]");
  return 2 * h - trace_measure(anchor(), h, Side::Both);
}

RationalIntervalSet ScaleFamily::truncate_to_interval_set(long depth) const {
  return construction_.prefix(depth);
}

RationalIntervalSet ScaleFamily::localize(const Rational& lo, const Rational& hi) const {
  const auto window = RationalIntervalSet::interval(lo, hi);
  const auto f = construction_.localize(lo, hi);
  return f.intersect(inside_).unite(window.difference(f).intersect(outside_)).intersect(window);
}

}  // namespace gdensity
