#include "gdensity/target.hpp"

#include <algorithm>

namespace gdensity {

namespace {

LocalSides sides_of(const RationalIntervalSet& s, const Rational& x, Rational cap) {
  Rational radius = std::move(cap);
  for (const auto& e : s.finite_endpoints()) {
    if (e == x) continue;
    const Rational d = abs(Rational(e - x));
    if (d < radius) radius = d;
  }
  LocalSides out;
  out.radius = radius;
  out.left_in = s.contains(x - radius / 2);
  out.right_in = s.contains(x + radius / 2);
  return out;
}

}  // namespace

bool Target::contains(const Rational& x) const {
  return std::visit([&](const auto& s) { return s.contains(x); }, repr_);
}

Rational Target::measure_within(const Rational& lo, const Rational& hi) const {
  return std::visit([&](const auto& s) { return s.measure_within(lo, hi); }, repr_);
}

Rational Target::trace(const Rational& x, const Rational& h, Side side) const {
  return std::visit([&](const auto& s) { return s.trace_measure(x, h, side); }, repr_);
}

Target Target::complement() const {
  return std::visit([](const auto& s) { return Target(s.complement()); }, repr_);
}

Target Target::translate(const Rational& z) const {
  return std::visit([&](const auto& s) { return Target(s.translate(z)); }, repr_);
}

Target Target::intersect(const Target& other) const {
  if (auto a = interval_set()) {
    if (auto b = other.interval_set()) return a->intersect(*b);
    return other.family()->intersect_with(*a);
  }
  if (auto b = other.interval_set()) return family()->intersect_with(*b);
  return family()->intersect(*other.family());
}

Target Target::unite(const Target& other) const {
  if (auto a = interval_set()) {
    if (auto b = other.interval_set()) return a->unite(*b);
    return other.family()->union_with(*a);
  }
  if (auto b = other.interval_set()) return family()->union_with(*b);
  return family()->unite(*other.family());
}

std::optional<Rational> Target::anchor() const {
  if (auto f = family()) return f->anchor();
  return std::nullopt;
}

std::optional<Rational> Target::validity_radius() const {
  if (auto f = family()) return f->validity_radius();
  return std::nullopt;
}

std::optional<LocalSides> Target::local_sides(const Rational& x) const {
  if (auto s = interval_set()) return sides_of(*s, x, Rational(1));
  const auto& f = *family();
  if (x == f.anchor()) return std::nullopt;
  const Rational r = abs(Rational(x - f.anchor())) / 2;
  const auto local = f.localize(x - r, x + r);
  // window endpoints appear as component endpoints; the cap keeps radius < r
  return sides_of(local, x, r);
}

}  // namespace gdensity
