#include "gdensity/interval_set.hpp"

#include <algorithm>

namespace gdensity {

bool operator<(const ExtRational& a, const ExtRational& b) {
  if (a.inf_ != 0 || b.inf_ != 0) {
    return a.inf_ < b.inf_;
  }
  return a.value_ < b.value_;
}

bool operator==(const ExtRational& a, const ExtRational& b) {
  if (a.inf_ != b.inf_) return false;
  return a.inf_ != 0 || a.value_ == b.value_;
}

namespace {

const ExtRational& ext_max(const ExtRational& a, const ExtRational& b) { return a < b ? b : a; }
const ExtRational& ext_min(const ExtRational& a, const ExtRational& b) { return b < a ? b : a; }

}  // namespace

RationalIntervalSet RationalIntervalSet::normalize(std::vector<Interval> raw) {
  for (const auto& iv : raw) {
    if (!(iv.lo < iv.hi)) throw DomainError("interval with lo >= hi");
    if (iv.lo.infinity_sign() > 0 || iv.hi.infinity_sign() < 0) throw DomainError("interval with misplaced infinity");
  }
  std::sort(raw.begin(), raw.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  RationalIntervalSet out;
  for (auto& iv : raw) {
    if (!out.parts_.empty() && iv.lo <= out.parts_.back().hi) {
      if (out.parts_.back().hi < iv.hi) out.parts_.back().hi = iv.hi;
    } else {
      out.parts_.push_back(std::move(iv));
    }
  }
  return out;
}

RationalIntervalSet RationalIntervalSet::from_pairs(const std::vector<std::pair<Rational, Rational>>& raw) {
  std::vector<Interval> ivs;
  ivs.reserve(raw.size());
  for (const auto& [lo, hi] : raw) ivs.push_back({lo, hi});
  return normalize(std::move(ivs));
}

RationalIntervalSet RationalIntervalSet::real_line() {
  RationalIntervalSet s;
  s.parts_.push_back({ExtRational::neg_inf(), ExtRational::pos_inf()});
  return s;
}

RationalIntervalSet RationalIntervalSet::interval(const Rational& lo, const Rational& hi) {
  return normalize({{lo, hi}});
}

RationalIntervalSet RationalIntervalSet::right_ray(const Rational& lo) {
  RationalIntervalSet s;
  s.parts_.push_back({lo, ExtRational::pos_inf()});
  return s;
}

RationalIntervalSet RationalIntervalSet::left_ray(const Rational& hi) {
  RationalIntervalSet s;
  s.parts_.push_back({ExtRational::neg_inf(), hi});
  return s;
}

bool RationalIntervalSet::unbounded_left() const {
  return !parts_.empty() && !parts_.front().lo.is_finite();
}

bool RationalIntervalSet::unbounded_right() const {
  return !parts_.empty() && !parts_.back().hi.is_finite();
}

bool RationalIntervalSet::contains(const Rational& x) const {
  const ExtRational ex(x);
  auto it = std::upper_bound(parts_.begin(), parts_.end(), ex,
                             [](const ExtRational& v, const Interval& iv) { return v < iv.hi; });
  return it != parts_.end() && it->lo < ex;
}

bool RationalIntervalSet::is_endpoint(const Rational& x) const {
  const ExtRational ex(x);
  return std::any_of(parts_.begin(), parts_.end(), [&](const Interval& iv) { return iv.lo == ex || iv.hi == ex; });
}

std::vector<Rational> RationalIntervalSet::finite_endpoints() const {
  std::vector<Rational> out;
  for (const auto& iv : parts_) {
    if (iv.lo.is_finite()) out.push_back(iv.lo.value());
    if (iv.hi.is_finite()) out.push_back(iv.hi.value());
  }
  return out;
}

Rational RationalIntervalSet::measure() const {
  if (!bounded()) throw DomainError("measure of an unbounded set");
  Rational total = 0;
  for (const auto& iv : parts_) total += iv.hi.value() - iv.lo.value();
  return total;
}

Rational RationalIntervalSet::measure_within(const Rational& lo, const Rational& hi) const {
  Rational total = 0;
  if (!(lo < hi)) return total;
  const ExtRational elo(lo), ehi(hi);
  for (const auto& iv : parts_) {
    if (!(iv.lo < ehi)) break;
    if (!(elo < iv.hi)) continue;
    const ExtRational& a = ext_max(iv.lo, elo);
    const ExtRational& b = ext_min(iv.hi, ehi);
    total += b.value() - a.value();
  }
  return total;
}

Rational RationalIntervalSet::trace_measure(const Rational& x, const Rational& h, Side side) const {
  if (h <= 0) throw DomainError("trace radius must be positive");
  switch (side) {
    case Side::Left: return measure_within(x - h, x);
    case Side::Right: return measure_within(x, x + h);
    case Side::Both: break;
  }
  return measure_within(x - h, x + h);
}

RationalIntervalSet RationalIntervalSet::intersect(const RationalIntervalSet& other) const {
  RationalIntervalSet out;
  std::size_t i = 0, j = 0;
  while (i < parts_.size() && j < other.parts_.size()) {
    const auto& a = parts_[i];
    const auto& b = other.parts_[j];
    const ExtRational& lo = ext_max(a.lo, b.lo);
    const ExtRational& hi = ext_min(a.hi, b.hi);
    if (lo < hi) out.parts_.push_back({lo, hi});
    if (a.hi < b.hi) ++i; else ++j;
  }
  return out;
}

RationalIntervalSet RationalIntervalSet::unite(const RationalIntervalSet& other) const {
  std::vector<Interval> raw = parts_;
  raw.insert(raw.end(), other.parts_.begin(), other.parts_.end());
  return normalize(std::move(raw));
}

RationalIntervalSet RationalIntervalSet::complement() const {
  RationalIntervalSet out;
  ExtRational cursor = ExtRational::neg_inf();
  for (const auto& iv : parts_) {
    if (cursor < iv.lo) out.parts_.push_back({cursor, iv.lo});
    cursor = iv.hi;
  }
  if (cursor < ExtRational::pos_inf()) out.parts_.push_back({cursor, ExtRational::pos_inf()});
  return out;
}

RationalIntervalSet RationalIntervalSet::complement_within(const Rational& lo, const Rational& hi) const {
  if (!(lo < hi)) throw DomainError("complement window needs lo < hi");
  return complement().intersect(interval(lo, hi));
}

RationalIntervalSet RationalIntervalSet::difference(const RationalIntervalSet& other) const {
  return intersect(other.complement());
}

RationalIntervalSet RationalIntervalSet::symmetric_difference(const RationalIntervalSet& other) const {
  return difference(other).unite(other.difference(*this));
}

RationalIntervalSet RationalIntervalSet::translate(const Rational& z) const {
  RationalIntervalSet out = *this;
  for (auto& iv : out.parts_) {
    if (iv.lo.is_finite()) iv.lo = ExtRational(iv.lo.value() + z);
    if (iv.hi.is_finite()) iv.hi = ExtRational(iv.hi.value() + z);
  }
  return out;
}

RationalIntervalSet RationalIntervalSet::reflect() const {
  RationalIntervalSet out;
  for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) {
    auto flip = [](const ExtRational& e) {
      if (!e.is_finite()) return e.infinity_sign() < 0 ? ExtRational::pos_inf() : ExtRational::neg_inf();
      return ExtRational(Rational(-e.value()));
    };
    out.parts_.push_back({flip(it->hi), flip(it->lo)});
  }
  return out;
}

bool RationalIntervalSet::subset_of(const RationalIntervalSet& other) const {
  return intersect(other) == *this;
}

}  // namespace gdensity
