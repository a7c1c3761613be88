// Density ratio traces, limit estimation and point classification.
#pragma once

#include "gdensity/modulus.hpp"
#include "gdensity/target.hpp"

#include <string>
#include <vector>

namespace gdensity {

/// Scales alpha0 * q^k, k = 0..K-1.
struct GridSpec {
  Rational alpha0{1, 4};
  Rational q{1, 2};
  long K = 60;

  /// DomainError unless alpha0 > 0, 0 < q < 1 and K >= 8.
  void validate() const;
  std::vector<Rational> scales() const;
};

struct Policy {
  int window = 8;
  double tol = 1e-3;
  double theta = 1e-3;
  double theta_limsup = 1e-2;

  void validate() const;
};

/// Which set the trace measures: the complement (density) or the set itself (dispersion).
enum class Measured { Complement, Set };

struct RatioTrace {
  Side side = Side::Both;
  Measured measured = Measured::Complement;
  std::vector<Rational> scales;    // strictly decreasing
  std::vector<Rational> measures;  // exact
  std::vector<Real> ratios;        // gamma(m) / gamma(2 alpha), or gamma(alpha) one-sided
  bool truncated = false;          // scales beyond a family's validity radius were dropped
};

/// DomainError for a family target when x is not closer to the anchor than the validity radius.
RatioTrace ratio_trace(const Modulus& g, const Target& target, const Rational& x, Side side,
                       const GridSpec& grid = {}, Measured measured = Measured::Complement);
/// Same on explicit scales (strictly decreasing, positive).
RatioTrace ratio_trace_on(const Modulus& g, const Target& target, const Rational& x, Side side,
                          const std::vector<Rational>& scales, Measured measured = Measured::Complement);

/// Neville extrapolation of the polynomial through (xs, ys) to x = 0.
Real extrapolate_to_zero(const std::vector<Real>& xs, const std::vector<Real>& ys);

struct LimitEstimate {
  bool stable = false;  // the last W ratios differ pairwise by < tol
  double estimate = 0;  // extrapolated in 1/log(1/alpha), clamped to [0, inf)
  double last = 0;
  double spread = 0;
};

LimitEstimate estimate_limit(const RatioTrace& trace, const Policy& policy);

enum class Truth { Yes, No, Unknown };

/// Whether the traced ratios tend to 0: Yes if stable and the last ratio is below theta,
/// No if stable and both the last ratio and the estimate are at least theta.
Truth tends_to_zero(const LimitEstimate& e, const Policy& policy);

enum class PointClass { GammaDensityPoint, GammaDispersionPoint, Neither, Indeterminate };

struct Verdict {
  PointClass cls = PointClass::Indeterminate;
  Truth density = Truth::Unknown;
  Truth dispersion = Truth::Unknown;
  double limit_estimate = 0;      // complement ratio
  double set_limit_estimate = 0;  // set ratio
  int stabilization_window = 0;
  double tolerance = 0;
  double theta = 0;
  bool exact = false;
  bool truncated = false;
};

/// Exact whenever the target's local structure at x is known (always, except at a
/// family's anchor); numeric policy otherwise.
Verdict classify_point(const Modulus& g, const Target& target, const Rational& x,
                       const GridSpec& grid = {}, const Policy& policy = {});
/// One-sided (or two-sided) density of target at x.
Truth density_on_side(const Modulus& g, const Target& target, const Rational& x, Side side,
                      const GridSpec& grid = {}, const Policy& policy = {});

std::vector<Verdict> density_points_on_grid(const Modulus& g, const RationalIntervalSet& a,
                                            const std::vector<Rational>& sample,
                                            const GridSpec& grid = {}, const Policy& policy = {});

struct OneSidedReport {
  Truth left = Truth::Unknown;
  Truth right = Truth::Unknown;
  Truth both = Truth::Unknown;
  bool decided = false;            // all three verdicts are Yes/No
  bool equivalence_holds = false;  // both == (left && right), vacuous when undecided
  bool inequalities_hold = false;
  std::size_t checked_scales = 0;
  std::string failure;
};

OneSidedReport one_sided_equivalence_check(const Modulus& g, const Target& target, const Rational& x,
                                           const GridSpec& grid = {}, const Policy& policy = {});

struct SequentialReport {
  Truth grid_verdict = Truth::Unknown;
  Truth sequence_verdict = Truth::Unknown;
  bool agree = false;
  bool bridge_holds = false;
  std::size_t checked_scales = 0;
  std::string failure;
};

/// Compares the geometric-grid density verdict with the verdict along alpha = 1/(n+1),
/// n = floor(1/alpha_k), and checks ratio(alpha) <= 2 ratio(1/n) and g(2/n) <= 2 g(2/(n+1)).
SequentialReport sequential_criterion_check(const Modulus& g, const Target& target, const Rational& x,
                                            const GridSpec& grid = {}, const Policy& policy = {});

/// psi-ratio m(alpha) / (2 alpha psi(2 alpha)) of the complement, two-sided.
RatioTrace psi_ratio_trace(const PsiDescriptor& psi, const Target& target, const Rational& x,
                           const GridSpec& grid = {});
Truth classify_psi_point(const PsiDescriptor& psi, const Target& target, const Rational& x,
                         const GridSpec& grid = {}, const Policy& policy = {});

std::string to_string(PointClass c);
std::string to_string(Truth t);
std::string to_string(Side s);
Side side_from_string(std::string_view s);

}  // namespace gdensity
