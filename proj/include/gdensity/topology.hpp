// Representable sets and the density topology: openness, interior, limit points.
#pragma once

#include "gdensity/density.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gdensity {

/// A declared countable point family.
struct CountableFamily {
  enum class Kind { Reciprocals, RationalsIn, ConstructionEndpoints };

  Kind kind = Kind::Reciprocals;
  long count = 0;          // Reciprocals: {1/n : n <= count} u {0}; 0 means all n
  Rational lo, hi;         // RationalsIn: Q n (lo, hi)
  FamilyKind construction = FamilyKind::DyadicGap;  // ConstructionEndpoints
  Rational anchor;

  static CountableFamily reciprocals(long count = 0);
  static CountableFamily rationals_in(const Rational& lo, const Rational& hi);
  static CountableFamily construction_endpoints(FamilyKind kind, const Rational& anchor = 0);

  bool contains(const Rational& x) const;
  bool infinite() const { return kind != Kind::Reciprocals || count == 0; }
  /// Up to n members, in a fixed order.
  std::vector<Rational> members(std::size_t n) const;
  std::string describe() const;
};

/// (kernel \ removed) u added, with null modifications.
class RepresentableSet {
 public:
  explicit RepresentableSet(Target kernel) : kernel_(std::move(kernel)) {}

  /// Union of the given open intervals; endpoints shared by touching intervals are
  /// recorded as removed, so (0,1) u (1,2) keeps 1 outside the set.
  static RepresentableSet from_raw_intervals(const std::vector<std::pair<Rational, Rational>>& raw);
  /// The example set U: DyadicGap kernel with its construction endpoints removed; the anchor stays.
  static RepresentableSet dyadic_gap_density_set(const Rational& anchor = 0);
  /// A null set made of points and families.
  static RepresentableSet null_set(std::vector<Rational> points, std::vector<CountableFamily> families = {});

  RepresentableSet& add(const Rational& x);
  RepresentableSet& add(const CountableFamily& f);
  RepresentableSet& remove(const Rational& x);
  RepresentableSet& remove(const CountableFamily& f);

  const Target& kernel() const { return kernel_; }
  const std::vector<Rational>& added() const { return added_; }
  const std::vector<CountableFamily>& added_families() const { return added_families_; }
  const std::vector<Rational>& removed() const { return removed_; }
  const std::vector<CountableFamily>& removed_families() const { return removed_families_; }

  bool contains(const Rational& x) const;
  bool is_removed(const Rational& x) const;
  bool is_added(const Rational& x) const;
  std::string describe() const;

 private:
  Target kernel_;
  std::vector<Rational> added_;
  std::vector<CountableFamily> added_families_;
  std::vector<Rational> removed_;
  std::vector<CountableFamily> removed_families_;
};

enum class OpenStatus { Open, NotOpen, Undecided };

struct OpenVerdict {
  OpenStatus status = OpenStatus::Undecided;
  std::optional<Rational> witness;
  std::string reason;
  bool exact = true;  // candidates exhaustive and every verdict exact
  std::size_t points_checked = 0;
};

/// Every point of A must be a density point of the kernel. Points of a finite-union kernel
/// are interior; the candidates are added points, kernel points on the boundary of the
/// construction or of its canonical parts, and a family's anchor (the only numeric case).
OpenVerdict is_gamma_open(const Modulus& g, const RepresentableSet& a, const GridSpec& grid = {},
                          const Policy& policy = {});
/// The same membership test with psi-density in place of gamma-density.
OpenVerdict is_psi_open(const PsiDescriptor& psi, const RepresentableSet& a, const GridSpec& grid = {},
                        const Policy& policy = {});

/// x in Int(A) iff x in A and x is a density point of the kernel. HypothesisError unless g
/// carries a Condition (A) certificate.
std::vector<Truth> interior(const Modulus& g, const RepresentableSet& a, const std::vector<Rational>& sample,
                            const GridSpec& grid = {}, const Policy& policy = {});

enum class LimitStatus { LimitPoint, NotLimitPoint, Undecided };

/// limsup of gamma(|(x-a,x+a) n A|)/gamma(2a) > 0, judged by the running max over the
/// deepest half of the grid against theta_limsup.
LimitStatus limit_point_test(const Modulus& g, const RepresentableSet& a, const Rational& x,
                             const GridSpec& grid = {}, const Policy& policy = {});

struct SamplePoint {
  Rational x;
  bool in_set = false;
  Rational complement_trace;  // measure of C near x at the finest scale checked
};

struct CountableClosedReport {
  bool complement_open = false;
  std::vector<SamplePoint> samples;
  bool all_traces_zero = true;
  // singleton cover {{x} : x in C}
  std::size_t members_checked = 0;
  bool singletons_relatively_open = true;
  bool infinite = false;
  bool no_finite_subcover = false;
};

CountableClosedReport countable_closed_check(const Modulus& g, const std::vector<Rational>& points,
                                             const std::vector<CountableFamily>& families,
                                             const std::vector<Rational>& sample, const GridSpec& grid = {},
                                             const Policy& policy = {});

struct NullCheckReport {
  RepresentableSet interior;
  std::vector<Rational> interior_difference;  // A sym-diff Int(A), all points
  std::vector<Rational> closure_difference;   // cl(A) sym-diff A, finite part
  std::vector<CountableFamily> closure_difference_families;
  Rational interior_difference_measure;
  Rational closure_difference_measure;
  bool null = false;
};

/// Symbolic Int and cl for a finite-union kernel. HypothesisError without a certificate,
/// DomainError for a family kernel.
NullCheckReport interior_closure_null_check(const Modulus& g, const RepresentableSet& a);

struct RegularityWitness {
  Rational h;
  Rational measure;  // |(-h, h) n V|
  bool exceeds = false;  // measure > h
};

RegularityWitness regularity_witness(const RationalIntervalSet& v, const Rational& h);

std::string to_string(OpenStatus s);
std::string to_string(LimitStatus s);

}  // namespace gdensity
