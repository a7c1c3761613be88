// A measurable set with exact trace measures: a finite interval union or a scale family.
#pragma once

#include "gdensity/interval_set.hpp"
#include "gdensity/scale_family.hpp"

#include <optional>
#include <variant>

namespace gdensity {

/// Structure of a set next to a point x: for all small eps, (x-eps, x) and
/// (x, x+eps) are either inside or outside the set (up to null sets).
struct LocalSides {
  bool left_in = false;
  bool right_in = false;
  Rational radius;  // the statement holds for eps < radius
};

class Target {
 public:
  Target(RationalIntervalSet set) : repr_(std::move(set)) {}  // NOLINT: implicit by intent
  Target(ScaleFamily family) : repr_(std::move(family)) {}    // NOLINT

  bool is_interval_set() const { return std::holds_alternative<RationalIntervalSet>(repr_); }
  const RationalIntervalSet* interval_set() const { return std::get_if<RationalIntervalSet>(&repr_); }
  const ScaleFamily* family() const { return std::get_if<ScaleFamily>(&repr_); }

  bool contains(const Rational& x) const;
  Rational measure_within(const Rational& lo, const Rational& hi) const;
  Rational trace(const Rational& x, const Rational& h, Side side) const;
  Target complement() const;
  Target translate(const Rational& z) const;
  /// DomainError when both operands are families on different constructions.
  Target intersect(const Target& other) const;
  Target unite(const Target& other) const;

  /// The accumulation point of a family; none for interval sets.
  std::optional<Rational> anchor() const;
  std::optional<Rational> validity_radius() const;
  /// Exact local structure; unavailable only at a family's anchor.
  std::optional<LocalSides> local_sides(const Rational& x) const;

 private:
  std::variant<RationalIntervalSet, ScaleFamily> repr_;
};

}  // namespace gdensity
