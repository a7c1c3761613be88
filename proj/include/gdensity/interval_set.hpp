// Exact set algebra and Lebesgue measure for finite unions of open intervals.
#pragma once

#include "gdensity/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace gdensity {

/// A rational number or one of the two infinities.
class ExtRational {
 public:
  ExtRational(Rational value) : inf_(0), value_(std::move(value)) {}  // NOLINT: implicit by intent
  ExtRational(long value) : inf_(0), value_(value) {}                 // NOLINT

  static ExtRational neg_inf() { return ExtRational(-1, true); }
  static ExtRational pos_inf() { return ExtRational(+1, true); }

  bool is_finite() const { return inf_ == 0; }
  int infinity_sign() const { return inf_; }
  /// Only meaningful for finite values.
  const Rational& value() const { return value_; }

  friend bool operator<(const ExtRational& a, const ExtRational& b);
  friend bool operator==(const ExtRational& a, const ExtRational& b);
  friend bool operator<=(const ExtRational& a, const ExtRational& b) { return !(b < a); }
  friend bool operator>(const ExtRational& a, const ExtRational& b) { return b < a; }
  friend bool operator>=(const ExtRational& a, const ExtRational& b) { return !(a < b); }

 private:
  ExtRational(int sign, bool) : inf_(sign) {}
  int inf_;
  Rational value_;
};

/// Open interval (lo, hi) with lo < hi.
struct Interval {
  ExtRational lo;
  ExtRational hi;

  bool bounded() const { return lo.is_finite() && hi.is_finite(); }
  friend bool operator==(const Interval& a, const Interval& b) { return a.lo == b.lo && a.hi == b.hi; }
};

enum class Side { Left, Right, Both };

/// Finite disjoint union of open intervals, kept in canonical form: sorted,
/// pairwise disjoint and non-adjacent (intervals sharing an endpoint merge,
/// since a single point is null). Only the first/last component may be unbounded.
class RationalIntervalSet {
 public:
  RationalIntervalSet() = default;

  /// Throws DomainError for a pair with lo >= hi.
  static RationalIntervalSet normalize(std::vector<Interval> raw);
  static RationalIntervalSet from_pairs(const std::vector<std::pair<Rational, Rational>>& raw);

  static RationalIntervalSet empty() { return {}; }
  static RationalIntervalSet real_line();
  static RationalIntervalSet interval(const Rational& lo, const Rational& hi);
  static RationalIntervalSet right_ray(const Rational& lo);  // (lo, +inf)
  static RationalIntervalSet left_ray(const Rational& hi);   // (-inf, hi)

  const std::vector<Interval>& intervals() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  bool is_empty() const { return parts_.empty(); }
  bool unbounded_left() const;
  bool unbounded_right() const;
  bool bounded() const { return !unbounded_left() && !unbounded_right(); }

  bool contains(const Rational& x) const;
  /// True when x is an endpoint of some component.
  bool is_endpoint(const Rational& x) const;
  std::vector<Rational> finite_endpoints() const;

  /// Exact Lebesgue measure; DomainError for unbounded sets.
  Rational measure() const;
  /// |S ∩ (lo, hi)| for a bounded window.
  Rational measure_within(const Rational& lo, const Rational& hi) const;
  /// |S ∩ (x-h, x+h)|, |S ∩ (x-h, x)| or |S ∩ (x, x+h)|; DomainError for h <= 0.
  Rational trace_measure(const Rational& x, const Rational& h, Side side) const;

  RationalIntervalSet intersect(const RationalIntervalSet& other) const;
  RationalIntervalSet unite(const RationalIntervalSet& other) const;
  /// Open representation of R \ closure(S).
  RationalIntervalSet complement() const;
  /// Open representation of window \ closure(S); DomainError unless lo < hi.
  RationalIntervalSet complement_within(const Rational& lo, const Rational& hi) const;
  RationalIntervalSet difference(const RationalIntervalSet& other) const;
  RationalIntervalSet symmetric_difference(const RationalIntervalSet& other) const;
  RationalIntervalSet translate(const Rational& z) const;
  RationalIntervalSet reflect() const;  // x -> -x

  bool subset_of(const RationalIntervalSet& other) const;

  friend bool operator==(const RationalIntervalSet& a, const RationalIntervalSet& b) { return a.parts_ == b.parts_; }

 private:
  std::vector<Interval> parts_;
};

// Free-function spellings of the core operations.
inline RationalIntervalSet normalize(std::vector<Interval> raw) { return RationalIntervalSet::normalize(std::move(raw)); }
inline Rational measure(const RationalIntervalSet& s) { return s.measure(); }
inline RationalIntervalSet intersect(const RationalIntervalSet& s, const RationalIntervalSet& t) { return s.intersect(t); }
inline RationalIntervalSet unite(const RationalIntervalSet& s, const RationalIntervalSet& t) { return s.unite(t); }
inline RationalIntervalSet translate(const RationalIntervalSet& s, const Rational& z) { return s.translate(z); }
inline RationalIntervalSet complement_within(const RationalIntervalSet& s, const Rational& lo, const Rational& hi) {
  return s.complement_within(lo, hi);
}
inline RationalIntervalSet symmetric_difference(const RationalIntervalSet& s, const RationalIntervalSet& t) {
  return s.symmetric_difference(t);
}
inline Rational trace_measure(const RationalIntervalSet& s, const Rational& x, const Rational& h, Side side) {
  return s.trace_measure(x, h, side);
}

}  // namespace gdensity
