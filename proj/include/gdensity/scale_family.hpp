// Countable interval constructions accumulating at an anchor point, with exact
// closed-form measures of their traces.
#pragma once

#include "gdensity/interval_set.hpp"

#include <string>

namespace gdensity {

enum class FamilyKind { DyadicGap, BumpSupport };

std::string to_string(FamilyKind kind);
FamilyKind family_kind_from_string(const std::string& name);

/// The countable union of construction intervals I_n, n >= 1, placed to the
/// right of the anchor at offsets s_n = 2^-(n+1) (mirrored to the left for the
/// dyadic gap construction).
///
///   DyadicGap:   t_n = 2^-n, delta_n = t_n^2 - t_{n+1}^2, I_n = (t_{n+1}, t_{n+1} + delta_n/2)
///   BumpSupport: a_n = 2^-(n+1), l_n = 2^-(2n+2),          I_n = (a_n, a_n + l_n)
class Construction {
 public:
  Construction(FamilyKind kind, Rational anchor) : kind_(kind), anchor_(std::move(anchor)) {}

  FamilyKind kind() const { return kind_; }
  const Rational& anchor() const { return anchor_; }
  bool mirrored() const { return kind_ == FamilyKind::DyadicGap; }

  /// Offset of I_n from the anchor.
  static Rational offset(long n) { return pow2(-(n + 1)); }
  Rational length(long n) const;
  /// Sum of the lengths of I_m for m >= n on one side.
  Rational tail(long n) const;
  /// Largest radius for which the construction fully covers (anchor-h, anchor+h).
  Rational validity_radius() const;

  /// Smallest n >= 1 with offset(n) < h (h > 0).
  static long first_index_below(const Rational& h);

  /// |(anchor, anchor + h) ∩ right-hand intervals|, any h >= 0.
  Rational cumulative(const Rational& h) const;
  Rational measure_within(const Rational& lo, const Rational& hi) const;
  bool contains(const Rational& x) const;
  bool is_endpoint(const Rational& x) const;

  /// The first `depth` intervals (both sides when mirrored), normalized.
  RationalIntervalSet prefix(long depth) const;
  /// Exact finite form of the construction inside (lo, hi); the closed window must avoid the anchor.
  RationalIntervalSet localize(const Rational& lo, const Rational& hi) const;
  /// Left and right endpoints of the right-hand interval I_n, shifted by the anchor.
  std::pair<Rational, Rational> interval(long n) const;

  friend bool operator==(const Construction& a, const Construction& b) {
    return a.kind_ == b.kind_ && a.anchor_ == b.anchor_;
  }

 private:
  FamilyKind kind_;
  Rational anchor_;
};

/// A set built from a construction F and two finite interval sets P, Q as
/// S = (F ∩ P) ∪ (F^c ∩ Q). Every complement/union/intersection with a finite
/// union (or with a set on the same construction) stays in this form, so trace
/// measures remain exact closed forms.
class ScaleFamily {
 public:
  /// The set B = R \ construction (the dyadic gap set).
  static ScaleFamily dyadic_gap(const Rational& anchor = 0);
  /// The witness A = R \ union of bump supports.
  static ScaleFamily bump_support(const Rational& anchor = 0);
  static ScaleFamily from_parts(Construction c, RationalIntervalSet in_construction, RationalIntervalSet outside);

  const Construction& construction() const { return construction_; }
  FamilyKind kind() const { return construction_.kind(); }
  const Rational& anchor() const { return construction_.anchor(); }
  const RationalIntervalSet& in_construction() const { return inside_; }
  const RationalIntervalSet& outside_construction() const { return outside_; }
  bool is_base() const;

  ScaleFamily complement() const;
  ScaleFamily union_with(const RationalIntervalSet& e) const;
  ScaleFamily intersect_with(const RationalIntervalSet& e) const;
  /// Both operands must share the construction; DomainError otherwise.
  ScaleFamily intersect(const ScaleFamily& other) const;
  ScaleFamily unite(const ScaleFamily& other) const;
  ScaleFamily translate(const Rational& z) const;

  bool contains(const Rational& x) const;
  Rational measure_within(const Rational& lo, const Rational& hi) const;
  Rational trace_measure(const Rational& x, const Rational& h, Side side) const;
  /// m(h) = |S^c ∩ (anchor-h, anchor+h)|; DomainError outside 0 < h <= validity radius.
  Rational complement_trace_measure(const Rational& h) const;
  Rational validity_radius() const { return construction_.validity_radius(); }

  /// Finite prefix of the construction (depth >= 1), for cross-checks.
  RationalIntervalSet truncate_to_interval_set(long depth) const;
  /// Exact finite form of S inside (lo, hi); the closed window must avoid the anchor.
  RationalIntervalSet localize(const Rational& lo, const Rational& hi) const;

  friend bool operator==(const ScaleFamily& a, const ScaleFamily& b) {
    return a.construction_ == b.construction_ && a.inside_ == b.inside_ && a.outside_ == b.outside_;
  }

 private:
  ScaleFamily(Construction c, RationalIntervalSet inside, RationalIntervalSet outside)
      : construction_(std::move(c)), inside_(std::move(inside)), outside_(std::move(outside)) {}

  Rational construction_measure(const RationalIntervalSet& window_part) const;

  Construction construction_;
  RationalIntervalSet inside_;
  RationalIntervalSet outside_;
};

inline Rational complement_trace_measure(const ScaleFamily& f, const Rational& h) { return f.complement_trace_measure(h); }
inline RationalIntervalSet truncate_to_interval_set(const ScaleFamily& f, long depth) {
  return f.truncate_to_interval_set(depth);
}

}  // namespace gdensity
