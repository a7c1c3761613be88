#include "gdensity/topology.hpp"

#include <algorithm>
#include <functional>

namespace gdensity {

namespace {

void insert_sorted(std::vector<Rational>& v, const Rational& x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it == v.end() || *it != x) v.insert(it, x);
}

bool sorted_has(const std::vector<Rational>& v, const Rational& x) { return std::binary_search(v.begin(), v.end(), x); }

// Number of construction intervals to inspect before the membership pattern near the
// anchor becomes uniform on each side.
long endpoint_depth(const ScaleFamily& f) {
  Rational r = f.validity_radius();
  for (const auto* part : {&f.in_construction(), &f.outside_construction()}) {
    for (const auto& e : part->finite_endpoints()) {
      if (e == f.anchor()) continue;
      const Rational d = abs(Rational(e - f.anchor()));
      if (d < r) r = d;
    }
  }
  return std::max(8L, Construction::first_index_below(r) + 2);
}

std::vector<Rational> kernel_candidates(const Target& kernel) {
  std::vector<Rational> out;
  const auto* f = kernel.family();
  if (!f) return out;
  out.push_back(f->anchor());
  for (const auto* part : {&f->in_construction(), &f->outside_construction()})
    for (const auto& e : part->finite_endpoints()) out.push_back(e);
  const long depth = endpoint_depth(*f);
  for (long n = 1; n <= depth; ++n) {
    const auto [lo, hi] = f->construction().interval(n);
    out.push_back(lo);
    out.push_back(hi);
    if (f->construction().mirrored()) {
      out.push_back(2 * f->anchor() - hi);
      out.push_back(2 * f->anchor() - lo);
    }
  }
  return out;
}

constexpr std::size_t kFamilyProbe = 64;

// density verdict at x and whether it was decided exactly
using DensityAt = std::function<std::pair<Truth, bool>(const Rational&)>;

OpenVerdict open_by(const RepresentableSet& a, const DensityAt& density_at) {
  OpenVerdict v;
  std::vector<Rational> candidates = kernel_candidates(a.kernel());
  for (const auto& x : a.added()) candidates.push_back(x);
  for (const auto& fam : a.added_families()) {
    for (const auto& x : fam.members(kFamilyProbe)) candidates.push_back(x);
    if (fam.infinite()) v.exact = false;
  }
  bool undecided = false;
  std::vector<Rational> seen;
  for (const auto& x : candidates) {
    if (sorted_has(seen, x) || !a.contains(x)) continue;
    insert_sorted(seen, x);
    ++v.points_checked;
    const auto [t, exact] = density_at(x);
    if (!exact) v.exact = false;
    if (t == Truth::No) {
      v.status = OpenStatus::NotOpen;
      v.witness = x;
      v.reason = "point " + to_string(x) + " of the set is not a density point";
      return v;
    }
    if (t == Truth::Unknown && !undecided) {
      undecided = true;
      v.witness = x;
    }
  }
  if (undecided) {
    v.status = OpenStatus::Undecided;
    v.reason = "density at " + to_string(*v.witness) + " is indeterminate on the grid";
    v.witness.reset();
    v.exact = false;
    return v;
  }
  v.status = OpenStatus::Open;
  v.reason = v.exact ? "every point of the set is a density point"
                     : "every probed point is a density point, some judged on the grid";
  return v;
}

}  // namespace

// ---------------------------------------------------------------- CountableFamily

CountableFamily CountableFamily::reciprocals(long count) {
  if (count < 0) throw DomainError("reciprocal family count must be nonnegative");
  CountableFamily f;
  f.kind = Kind::Reciprocals;
  f.count = count;
  return f;
}

CountableFamily CountableFamily::rationals_in(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw DomainError("rational family needs lo < hi");
  CountableFamily f;
  f.kind = Kind::RationalsIn;
  f.lo = lo;
  f.hi = hi;
  return f;
}

CountableFamily CountableFamily::construction_endpoints(FamilyKind kind, const Rational& anchor) {
  CountableFamily f;
  f.kind = Kind::ConstructionEndpoints;
  f.construction = kind;
  f.anchor = anchor;
  return f;
}

bool CountableFamily::contains(const Rational& x) const {
  switch (kind) {
    case Kind::Reciprocals: {
      if (x == 0) return true;
      if (x <= 0 || numerator(x) != 1) return false;
      return count == 0 || denominator(x) <= count;
    }
    case Kind::RationalsIn: return lo < x && x < hi;
    case Kind::ConstructionEndpoints: return Construction(construction, anchor).is_endpoint(x);
  }
  return false;
}

std::vector<Rational> CountableFamily::members(std::size_t n) const {
  std::vector<Rational> out;
  switch (kind) {
    case Kind::Reciprocals: {
      if (n > 0) out.push_back(0);
      for (long k = 1; out.size() < n && (count == 0 || k <= count); ++k) out.emplace_back(1, k);
      break;
    }
    case Kind::RationalsIn: {
      // by increasing denominator
      for (long d = 1; out.size() < n; ++d) {
        const Integer first = numerator(lo * d) / denominator(lo * d) - 1;
        for (Integer p = first; out.size() < n; ++p) {
          const Rational x(p, Integer(d));
          if (x >= hi) break;
          if (x > lo && denominator(x) == d) out.push_back(x);
        }
      }
      break;
    }
    case Kind::ConstructionEndpoints: {
      const Construction c(construction, anchor);
      for (long k = 1; out.size() < n; ++k) {
        const auto [a, b] = c.interval(k);
        for (const Rational& x : {a, b})
          if (out.size() < n) out.push_back(x);
        if (c.mirrored())
          for (const Rational& x : {Rational(2 * anchor - a), Rational(2 * anchor - b)})
            if (out.size() < n) out.push_back(x);
      }
      break;
    }
  }
  return out;
}

std::string CountableFamily::describe() const {
  switch (kind) {
    case Kind::Reciprocals:
      return count == 0 ? "{1/n} u {0}" : "{1/n : n <= " + std::to_string(count) + "} u {0}";
    case Kind::RationalsIn: return "Q n (" + to_string(lo) + ", " + to_string(hi) + ")";
    case Kind::ConstructionEndpoints: return to_string(construction) + " endpoints at " + to_string(anchor);
  }
  return "";
}

// ---------------------------------------------------------------- RepresentableSet

RepresentableSet RepresentableSet::from_raw_intervals(const std::vector<std::pair<Rational, Rational>>& raw) {
  RepresentableSet s(RationalIntervalSet::from_pairs(raw));
  for (const auto& a : raw)
    for (const auto& b : raw)
      if (a.second == b.first) s.remove(a.second);
  return s;
}

RepresentableSet RepresentableSet::dyadic_gap_density_set(const Rational& anchor) {
  RepresentableSet s(ScaleFamily::dyadic_gap(anchor));
  s.remove(CountableFamily::construction_endpoints(FamilyKind::DyadicGap, anchor));
  return s;
}

RepresentableSet RepresentableSet::null_set(std::vector<Rational> points, std::vector<CountableFamily> families) {
  RepresentableSet s(RationalIntervalSet::empty());
  for (const auto& x : points) s.add(x);
  for (const auto& f : families) s.add(f);
  return s;
}

RepresentableSet& RepresentableSet::add(const Rational& x) {
  insert_sorted(added_, x);
  auto it = std::lower_bound(removed_.begin(), removed_.end(), x);
  if (it != removed_.end() && *it == x) removed_.erase(it);
  return *this;
}

RepresentableSet& RepresentableSet::add(const CountableFamily& f) {
  added_families_.push_back(f);
  return *this;
}

RepresentableSet& RepresentableSet::remove(const Rational& x) {
  insert_sorted(removed_, x);
  auto it = std::lower_bound(added_.begin(), added_.end(), x);
  if (it != added_.end() && *it == x) added_.erase(it);
  return *this;
}

RepresentableSet& RepresentableSet::remove(const CountableFamily& f) {
  removed_families_.push_back(f);
  return *this;
}

bool RepresentableSet::is_removed(const Rational& x) const {
  if (sorted_has(removed_, x)) return true;
  return std::any_of(removed_families_.begin(), removed_families_.end(),
                     [&](const CountableFamily& f) { return f.contains(x); });
}

bool RepresentableSet::is_added(const Rational& x) const {
  if (sorted_has(added_, x)) return true;
  return std::any_of(added_families_.begin(), added_families_.end(),
                     [&](const CountableFamily& f) { return f.contains(x); });
}

bool RepresentableSet::contains(const Rational& x) const {
  if (sorted_has(added_, x)) return true;
  if (sorted_has(removed_, x)) return false;
  // added families win over removed families
  if (std::any_of(added_families_.begin(), added_families_.end(),
                  [&](const CountableFamily& f) { return f.contains(x); }))
    return true;
  return kernel_.contains(x) && !is_removed(x);
}

std::string RepresentableSet::describe() const {
  std::string s;
  if (const auto* k = kernel_.interval_set()) {
    s = "kernel with " + std::to_string(k->size()) + " intervals";
  } else {
    s = "kernel " + to_string(kernel_.family()->kind()) + " at " + to_string(kernel_.family()->anchor());
  }
  if (!added_.empty()) s += ", " + std::to_string(added_.size()) + " added points";
  for (const auto& f : added_families_) s += ", added " + f.describe();
  if (!removed_.empty()) s += ", " + std::to_string(removed_.size()) + " removed points";
  for (const auto& f : removed_families_) s += ", removed " + f.describe();
  return s;
}

// ---------------------------------------------------------------- topology

OpenVerdict is_gamma_open(const Modulus& g, const RepresentableSet& a, const GridSpec& grid, const Policy& policy) {
  return open_by(a, [&](const Rational& x) {
    const auto v = classify_point(g, a.kernel(), x, grid, policy);
    return std::pair{v.density, v.exact};
  });
}

OpenVerdict is_psi_open(const PsiDescriptor& psi, const RepresentableSet& a, const GridSpec& grid,
                        const Policy& policy) {
  return open_by(a, [&](const Rational& x) {
    return std::pair{classify_psi_point(psi, a.kernel(), x, grid, policy), a.kernel().local_sides(x).has_value()};
  });
}

std::vector<Truth> interior(const Modulus& g, const RepresentableSet& a, const std::vector<Rational>& sample,
                            const GridSpec& grid, const Policy& policy) {
  if (!certified_condition_a(g))
    throw HypothesisError("interior needs a Condition (A) certificate; " + g.name() + " has none");
  std::vector<Truth> out;
  out.reserve(sample.size());
  for (const auto& x : sample) {
    if (!a.contains(x)) out.push_back(Truth::No);
    else out.push_back(classify_point(g, a.kernel(), x, grid, policy).density);
  }
  return out;
}

LimitStatus limit_point_test(const Modulus& g, const RepresentableSet& a, const Rational& x, const GridSpec& grid,
                             const Policy& policy) {
  grid.validate();
  policy.validate();
  // A \ {x} differs from the kernel by a null set, so its traces are the kernel's
  if (auto sides = a.kernel().local_sides(x))
    return (sides->left_in || sides->right_in) ? LimitStatus::LimitPoint : LimitStatus::NotLimitPoint;
  const auto t = ratio_trace(g, a.kernel(), x, Side::Both, grid, Measured::Set);
  const std::size_t half = t.ratios.size() / 2;
  Real running = 0;
  for (std::size_t k = half; k < t.ratios.size(); ++k) running = std::max(running, t.ratios[k]);
  if (running > policy.theta_limsup) return LimitStatus::LimitPoint;
  return estimate_limit(t, policy).stable ? LimitStatus::NotLimitPoint : LimitStatus::Undecided;
}

CountableClosedReport countable_closed_check(const Modulus& g, const std::vector<Rational>& points,
                                             const std::vector<CountableFamily>& families,
                                             const std::vector<Rational>& sample, const GridSpec& grid,
                                             const Policy& policy) {
  CountableClosedReport r;
  RepresentableSet complement(RationalIntervalSet::real_line());
  for (const auto& x : points) complement.remove(x);
  for (const auto& f : families) complement.remove(f);
  r.complement_open = is_gamma_open(g, complement, grid, policy).status == OpenStatus::Open;

  const auto scales = grid.scales();
  for (const auto& x : sample) {
    SamplePoint p;
    p.x = x;
    p.in_set = !complement.contains(x);
    if (!p.in_set) {
      // C is null: the complement of the complement has zero trace at every scale
      const auto t = ratio_trace(g, complement.kernel(), x, Side::Both, grid);
      p.complement_trace = t.measures.back();
      for (const auto& m : t.measures)
        if (m != 0) r.all_traces_zero = false;
    }
    r.samples.push_back(std::move(p));
  }

  std::vector<Rational> members = points;
  for (const auto& f : families) {
    // every member of a finite family, a prefix of an infinite one
    const auto m = f.members(f.infinite() ? kFamilyProbe : static_cast<std::size_t>(f.count) + 1);
    members.insert(members.end(), m.begin(), m.end());
    r.infinite = r.infinite || f.infinite();
  }
  for (const auto& x : members) {
    RepresentableSet u = complement;
    u.add(x);  // {x} = C n u with u open
    ++r.members_checked;
    if (is_gamma_open(g, u, grid, policy).status != OpenStatus::Open) r.singletons_relatively_open = false;
  }
  r.no_finite_subcover = r.infinite && r.singletons_relatively_open;
  return r;
}

NullCheckReport interior_closure_null_check(const Modulus& g, const RepresentableSet& a) {
  const auto* k = a.kernel().interval_set();
  if (!k) throw DomainError("interior/closure check needs a finite-union kernel");
  if (!certified_condition_a(g))
    throw HypothesisError("interior needs a Condition (A) certificate; " + g.name() + " has none");
  RepresentableSet in(*k);
  for (const auto& x : a.removed()) in.remove(x);
  for (const auto& f : a.removed_families()) in.remove(f);
  NullCheckReport r{in, {}, {}, {}, 0, 0, false};
  const Target kernel(*k);
  for (const auto& x : a.added()) {
    if (classify_point(g, kernel, x).density == Truth::Yes) r.interior.add(x);
    else r.interior_difference.push_back(x);
  }
  // cl(A) = A together with every point that is not a dispersion point of the kernel
  for (const auto& e : k->finite_endpoints())
    if (!a.contains(e)) insert_sorted(r.closure_difference, e);
  for (const auto& x : a.removed())
    if (classify_point(g, kernel, x).dispersion == Truth::No) insert_sorted(r.closure_difference, x);
  r.closure_difference_families = a.removed_families();
  // finitely many points plus countable families: null
  r.null = true;
  return r;
}

RegularityWitness regularity_witness(const RationalIntervalSet& v, const Rational& h) {
  if (h <= 0) throw DomainError("regularity witness needs h > 0");
  RegularityWitness w;
  w.h = h;
  w.measure = v.measure_within(-h, h);
  w.exceeds = w.measure > h;
  return w;
}

std::string to_string(OpenStatus s) {
  switch (s) {
    case OpenStatus::Open: return "Open";
    case OpenStatus::NotOpen: return "NotOpen";
    case OpenStatus::Undecided: return "Undecided";
  }
  return "Undecided";
}

std::string to_string(LimitStatus s) {
  switch (s) {
    case LimitStatus::LimitPoint: return "LimitPoint";
    case LimitStatus::NotLimitPoint: return "NotLimitPoint";
    case LimitStatus::Undecided: return "Undecided";
  }
  return "Undecided";
}

}  // namespace gdensity
