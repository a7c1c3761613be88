// Functions evaluated exactly on rationals, witnesses, and approximate continuity checks.
#pragma once

#include "gdensity/topology.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gdensity {

/// Polynomial coefficients c0 + c1 t + ... on the half-open piece [lo, hi).
struct Piece {
  ExtRational lo;
  ExtRational hi;
  std::vector<Rational> poly;
};

Rational eval_poly(const std::vector<Rational>& poly, const Rational& t);

/// Piecewise polynomial, 0 outside the pieces, with optional point values.
struct PiecewisePoly {
  std::vector<Piece> pieces;
  std::map<Rational, Rational> point_values;

  /// DomainError on empty or overlapping pieces.
  void validate() const;
  Rational operator()(const Rational& x) const;
  Rational limit_from_left(const Rational& x) const;
  Rational limit_from_right(const Rational& x) const;
  bool continuous_at(const Rational& x) const;

  static PiecewisePoly polynomial(std::vector<Rational> poly);
  static PiecewisePoly abs();   // |t|
  static PiecewisePoly sign();  // -1, 0, 1
};

class Function {
 public:
  static Function constant(const Rational& c);
  static Function piecewise(PiecewisePoly p);
  /// Sum of triangular bumps of height n on the BumpSupport intervals I_n, n <= n_max.
  static Function bump_sum(long n_max, const Rational& anchor = 0);

  Function operator+(const Function& other) const;
  Function operator-(const Function& other) const;
  Function scaled(const Rational& c) const;
  /// phi o this.
  Function composed_with(const PiecewisePoly& phi) const;

  Rational operator()(const Rational& x) const;
  /// Points where some piece changes, where bumps peak or vanish.
  std::vector<Rational> breakpoints() const;
  /// Whether all pieces are at most linear.
  bool piecewise_linear() const;
  std::string describe() const;

  struct Node;  // expression tree, defined in the implementation

 private:
  explicit Function(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Sup of |f - g| over breakpoints and interior sample points of the pieces, within [lo, hi].
Rational sampled_sup_distance(const Function& f, const Function& g, const Rational& lo, const Rational& hi);

struct WitnessedFunction {
  Function f;
  std::map<Rational, RepresentableSet> witnesses;

  const RepresentableSet& witness(const Rational& x0) const;  // DomainError when missing
};

enum class AlongLimit { Converges, Diverges, Undecided };

struct AlongSample {
  Rational x;
  Rational value;
  Rational deviation;  // |f(x) - f(x0)|
};

struct ApproxContinuityVerdict {
  Verdict witness_density;
  AlongLimit along = AlongLimit::Undecided;
  Truth overall = Truth::Unknown;
  std::vector<AlongSample> samples;
  Rational max_tail_deviation;  // over the deepest W samples
};

/// Exact comparison threshold for the along-witness limit.
inline const Rational kAlongTolerance{1, 1000000000};

/// Points inside the witness at distances in (d/2, d) from x0 on both sides, d = alpha0 q^j.
std::vector<Rational> witness_samples(const RepresentableSet& witness, const Rational& x0, const GridSpec& grid);

ApproxContinuityVerdict check_point(const WitnessedFunction& f, const Rational& x0, const Modulus& g,
                                    const GridSpec& grid = {}, const Policy& policy = {});
ApproxContinuityVerdict check_point_with(const Function& f, const RepresentableSet& witness, const Rational& x0,
                                         const Modulus& g, const GridSpec& grid = {}, const Policy& policy = {});

/// Intersection: kernels intersected, added points kept when the other set contains them,
/// removals united.
RepresentableSet combine_witnesses(const RepresentableSet& a, const RepresentableSet& b);

struct SumReport {
  bool precondition = false;  // both f and g pass at x0
  ApproxContinuityVerdict sum;
  std::vector<std::pair<Rational, ApproxContinuityVerdict>> multiples;  // c f with f's witness
  bool holds = false;
};

SumReport sum_is_approx_continuous(const WitnessedFunction& f, const WitnessedFunction& g, const Rational& x0,
                                   const Modulus& gamma, const std::vector<Rational>& scalars = {-3, Rational(1, 2)},
                                   const GridSpec& grid = {}, const Policy& policy = {});

/// BumpSum up to n_max with witness R \ u I_n registered at 0. DomainError for n_max < 1.
WitnessedFunction build_bump_function(long n_max);
/// Midpoint of I_n.
Rational bump_peak(long n);

struct ComposeReport {
  ApproxContinuityVerdict before;
  ApproxContinuityVerdict after;
  bool holds = false;
};

/// HypothesisError when phi is discontinuous at f(x0).
ComposeReport compose_continuous(const WitnessedFunction& f, const PiecewisePoly& phi, const Rational& x0,
                                 const Modulus& g, const GridSpec& grid = {}, const Policy& policy = {});

struct UniformLimitReport {
  std::vector<Truth> members_pass;
  std::vector<Rational> sup_distances;  // sampled ||f_n - f||
  ApproxContinuityVerdict limit;
  // |f(p) - f(x0)| <= 2 ||f_n - f|| + |f_n(p) - f_n(x0)| at every witness sample, for the last n
  bool three_epsilon_bound = false;
  Rational realized_bound;
  bool holds = false;
  std::string note;
};

/// DomainError when no common witness is supplied.
UniformLimitReport uniform_limit_check(const std::vector<Function>& fs, const Function& f, const Rational& x0,
                                       const std::optional<RepresentableSet>& common_witness, const Modulus& g,
                                       const GridSpec& grid = {}, const Policy& policy = {});

std::string to_string(AlongLimit a);

}  // namespace gdensity
