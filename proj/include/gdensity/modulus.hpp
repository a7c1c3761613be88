// Modulus functions: evaluation, axiom validation, Condition (A) and ratio bounds.
#pragma once

#include "gdensity/rational.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gdensity {

enum class ModulusKind { Identity, Power, Bounded, Log, PsiDerived };

/// Catalog shapes a psi function may take: coefficient * shape(t).
enum class PsiShape { Power, Saturating, Log };

struct PsiDescriptor {
  PsiShape shape = PsiShape::Power;
  Rational coefficient = 1;
  Rational exponent = 1;  // only for PsiShape::Power
  // Declared membership in the class C (continuous, nondecreasing, psi(0+) = 0)
  // and declared subadditivity.
  bool continuous = true;
  bool nondecreasing = true;
  bool vanishes_at_zero = true;
  bool subadditive = true;
};

class Modulus {
 public:
  static Modulus identity();
  /// t^p, 0 < p < 1.
  static Modulus power(const Rational& p);
  /// t / (1 + t).
  static Modulus bounded();
  /// 1/log(e/t) on (0, 1/e], (e/4) t + 1/4 above.
  static Modulus log();
  /// Wraps psi without any checks; used for probes that are known not to be moduli.
  static Modulus psi_unchecked(const PsiDescriptor& psi);

  ModulusKind kind() const { return kind_; }
  const Rational& exponent() const { return exponent_; }
  const std::optional<PsiDescriptor>& psi() const { return psi_; }
  std::string name() const;

  /// DomainError for t < 0; exactly 0 at t = 0.
  Real operator()(const Real& t) const;
  Real operator()(const Rational& t) const;

  friend bool operator==(const Modulus& a, const Modulus& b);

 private:
  Modulus(ModulusKind kind, Rational exponent) : kind_(kind), exponent_(std::move(exponent)) {}
  Real evaluate(const Rational& t) const;

  ModulusKind kind_;
  Rational exponent_;
  std::optional<PsiDescriptor> psi_;
};

/// "identity", "power:1/2", "bounded", "log", "psi:power:<coef>:<exp>",
/// "psi:saturating:<coef>", "psi:log:<coef>". ParseError on anything else.
Modulus parse_modulus(std::string_view spec);

/// The catalog used by property suites: identity, power 1/4, 1/2, 3/4, bounded, log.
std::vector<Modulus> modulus_catalog();

/// Geometric grid start, start*ratio, ..., count points.
struct GeometricGrid {
  Rational start;
  Rational ratio;
  long count;

  std::vector<Rational> points() const;
  static GeometricGrid dyadic(long k_from, long k_to);  // 2^-k_from ... 2^-k_to
};

struct AxiomCheck {
  std::string name;
  bool passed = true;
  double worst = 0;      // largest relative excess observed
  std::string witness;   // where the worst case occurred
};

struct ValidationReport {
  std::vector<AxiomCheck> checks;
  bool weakly_increasing = true;
  bool strictly_increasing = true;

  bool passed() const;
  const AxiomCheck& check(std::string_view name) const;
};

/// Default grid: 4, 2, 1, ..., 2^-100.
GeometricGrid default_validation_grid();
ValidationReport validate_modulus(const Modulus& g, const GeometricGrid& grid = default_validation_grid(),
                                  double tol = 1e-12);

struct ConditionAGrid {
  std::vector<Rational> c_grid;  // descending
  std::vector<Rational> t_grid;  // descending
  std::string description;

  /// c = 2^-1 .. 2^-40, t = 2^-10 .. 2^-1000.
  static ConditionAGrid defaults();
};

struct ConditionACertificate {
  double epsilon = 0;
  Rational c_epsilon;
  Rational delta_epsilon;
  double max_observed_ratio = 0;
};

struct CandidateEvidence {
  Rational c;
  double ratio_at_finest = 0;  // gamma(c t)/gamma(t) at the smallest t
  double floor = 0;            // min ratio over the finest half of the t grid
};

struct RefutationEvidence {
  double epsilon = 0;
  Rational finest_t;
  std::vector<CandidateEvidence> candidates;
  double min_ratio_at_finest = 0;  // min over c of ratio_at_finest
};

enum class ConditionAStatus { Certificate, Refutation, Inconclusive };

/// Grid-relative verdict: a certificate or refutation evidence, never a proof.
struct ConditionAResult {
  ConditionAStatus status = ConditionAStatus::Inconclusive;
  std::optional<ConditionACertificate> certificate;
  std::optional<RefutationEvidence> refutation;
  std::string grid_description;
  bool grid_relative = true;
};

/// DomainError unless 0 < epsilon < 1 and the grids are non-degenerate
/// (finest t at most 2^-60).
ConditionAResult check_condition_a(const Modulus& g, double epsilon,
                                   const ConditionAGrid& grid = ConditionAGrid::defaults());

/// Whether g is certified for every epsilon in {0.5, 0.1, 0.01}.
bool certified_condition_a(const Modulus& g);

struct RatioBound {
  double lower = 0;
  double upper = 0;
  bool uniform = false;
};

/// Default grid inside (0, delta): delta (1 - 2^-j), j = 1..20, and delta 2^-k, k = 1..200.
std::vector<Rational> default_ratio_grid(const Rational& delta);
/// Empirical min/max of g1/g2 on the grid. DomainError if g2 vanishes at a grid point.
RatioBound ratio_bound(const Modulus& g1, const Modulus& g2, const Rational& delta,
                       std::vector<Rational> t_grid = {});

/// Builds the modulus gamma(0) = 0, gamma(t) = psi(t). DomainError when psi is not
/// declared in C and subadditive, or when sampled subadditivity fails (message carries the witness).
Modulus from_psi(const PsiDescriptor& psi);

/// limsup psi(t)/t < infinity, judged on t = 2^-k.
bool psi_linear_bounded(const PsiDescriptor& psi);
Real eval_psi(const PsiDescriptor& psi, const Real& t);

}  // namespace gdensity
