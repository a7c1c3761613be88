#include "gdensity/approx_continuity.hpp"

#include <algorithm>
#include <set>

namespace gdensity {

Rational eval_poly(const std::vector<Rational>& poly, const Rational& t) {
  Rational acc = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * t + *it;
  return acc;
}

// ---------------------------------------------------------------- PiecewisePoly

void PiecewisePoly::validate() const {
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (!(pieces[i].lo < pieces[i].hi)) throw DomainError("piece with lo >= hi");
    for (std::size_t j = i + 1; j < pieces.size(); ++j)
      if (pieces[i].lo < pieces[j].hi && pieces[j].lo < pieces[i].hi) throw DomainError("overlapping pieces");
  }
}

Rational PiecewisePoly::operator()(const Rational& x) const {
  if (auto it = point_values.find(x); it != point_values.end()) return it->second;
  return limit_from_right(x);
}

Rational PiecewisePoly::limit_from_left(const Rational& x) const {
  for (const auto& p : pieces)
    if (p.lo < ExtRational(x) && ExtRational(x) <= p.hi) return eval_poly(p.poly, x);
  return 0;
}

Rational PiecewisePoly::limit_from_right(const Rational& x) const {
  for (const auto& p : pieces)
    if (p.lo <= ExtRational(x) && ExtRational(x) < p.hi) return eval_poly(p.poly, x);
  return 0;
}

bool PiecewisePoly::continuous_at(const Rational& x) const {
  const Rational v = (*this)(x);
  return limit_from_left(x) == v && limit_from_right(x) == v;
}

PiecewisePoly PiecewisePoly::polynomial(std::vector<Rational> poly) {
  PiecewisePoly p;
  p.pieces.push_back({ExtRational::neg_inf(), ExtRational::pos_inf(), std::move(poly)});
  return p;
}

PiecewisePoly PiecewisePoly::abs() {
  PiecewisePoly p;
  p.pieces.push_back({ExtRational::neg_inf(), 0, {0, -1}});
  p.pieces.push_back({0, ExtRational::pos_inf(), {0, 1}});
  return p;
}

PiecewisePoly PiecewisePoly::sign() {
  PiecewisePoly p;
  p.pieces.push_back({ExtRational::neg_inf(), 0, {-1}});
  p.pieces.push_back({0, ExtRational::pos_inf(), {1}});
  p.point_values[0] = 0;
  return p;
}

// ---------------------------------------------------------------- Function

struct Function::Node {
  enum class Kind { Piecewise, Bump, Sum, Scale, Compose };
  Kind kind = Kind::Piecewise;
  PiecewisePoly pw;  // Piecewise, or phi for Compose
  long n_max = 0;
  Rational anchor;
  Rational c;
  std::shared_ptr<const Node> a, b;
};

namespace {

using NodePtr = std::shared_ptr<const Function::Node>;

Rational bump_value(long n_max, const Rational& anchor, const Rational& x) {
  const Rational d = x - anchor;
  if (d <= 0) return 0;
  const long n = Construction::first_index_below(d);
  if (n > n_max) return 0;
  const Rational a = Construction::offset(n);
  const Rational len = pow4(-(n + 1));
  if (d <= a || d >= a + len) return 0;
  const Rational slope = Rational(2 * n) / len;
  return d <= a + len / 2 ? Rational(slope * (d - a)) : Rational(slope * (a + len - d));
}

Rational eval_node(const Function::Node& n, const Rational& x) {
  using K = Function::Node::Kind;
  switch (n.kind) {
    case K::Piecewise: return n.pw(x);
    case K::Bump: return bump_value(n.n_max, n.anchor, x);
    case K::Sum: return eval_node(*n.a, x) + eval_node(*n.b, x);
    case K::Scale: return n.c * eval_node(*n.a, x);
    case K::Compose: return n.pw(eval_node(*n.a, x));
  }
  return 0;
}

void collect_breakpoints(const Function::Node& n, std::set<Rational>& out) {
  using K = Function::Node::Kind;
  switch (n.kind) {
    case K::Piecewise:
      for (const auto& p : n.pw.pieces) {
        if (p.lo.is_finite()) out.insert(p.lo.value());
        if (p.hi.is_finite()) out.insert(p.hi.value());
      }
      for (const auto& [x, v] : n.pw.point_values) out.insert(x);
      return;
    case K::Bump:
      out.insert(n.anchor);
      for (long k = 1; k <= n.n_max; ++k) {
        const Rational a = n.anchor + Construction::offset(k);
        const Rational len = pow4(-(k + 1));
        out.insert(a);
        out.insert(a + len / 2);
        out.insert(a + len);
      }
      return;
    case K::Sum:
      collect_breakpoints(*n.a, out);
      collect_breakpoints(*n.b, out);
      return;
    case K::Scale:
    case K::Compose: collect_breakpoints(*n.a, out); return;
  }
}

bool linear_pieces(const PiecewisePoly& p) {
  return std::all_of(p.pieces.begin(), p.pieces.end(), [](const Piece& q) { return q.poly.size() <= 2; });
}

bool node_linear(const Function::Node& n) {
  using K = Function::Node::Kind;
  switch (n.kind) {
    case K::Piecewise: return linear_pieces(n.pw);
    case K::Bump: return true;
    case K::Sum: return node_linear(*n.a) && node_linear(*n.b);
    case K::Scale: return node_linear(*n.a);
    case K::Compose: return linear_pieces(n.pw) && node_linear(*n.a);
  }
  return false;
}

std::string describe_node(const Function::Node& n) {
  using K = Function::Node::Kind;
  switch (n.kind) {
    case K::Piecewise: return "piecewise(" + std::to_string(n.pw.pieces.size()) + " pieces)";
    case K::Bump: return "bump_sum(" + std::to_string(n.n_max) + ")";
    case K::Sum: return "(" + describe_node(*n.a) + " + " + describe_node(*n.b) + ")";
    case K::Scale: return to_string(n.c) + "*" + describe_node(*n.a);
    case K::Compose: return "phi(" + describe_node(*n.a) + ")";
  }
  return "";
}

}  // namespace

Function Function::constant(const Rational& c) { return piecewise(PiecewisePoly::polynomial({c})); }

Function Function::piecewise(PiecewisePoly p) {
  p.validate();
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Piecewise;
  n->pw = std::move(p);
  return Function(n);
}

Function Function::bump_sum(long n_max, const Rational& anchor) {
  if (n_max < 1) throw DomainError("bump sum needs n_max >= 1");
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Bump;
  n->n_max = n_max;
  n->anchor = anchor;
  return Function(n);
}

Function Function::operator+(const Function& other) const {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Sum;
  n->a = node_;
  n->b = other.node_;
  return Function(n);
}

Function Function::operator-(const Function& other) const { return *this + other.scaled(-1); }

Function Function::scaled(const Rational& c) const {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Scale;
  n->c = c;
  n->a = node_;
  return Function(n);
}

Function Function::composed_with(const PiecewisePoly& phi) const {
  phi.validate();
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Compose;
  n->pw = phi;
  n->a = node_;
  return Function(n);
}

Rational Function::operator()(const Rational& x) const { return eval_node(*node_, x); }

std::vector<Rational> Function::breakpoints() const {
  std::set<Rational> s;
  collect_breakpoints(*node_, s);
  return {s.begin(), s.end()};
}

bool Function::piecewise_linear() const { return node_linear(*node_); }

std::string Function::describe() const { return describe_node(*node_); }

Rational sampled_sup_distance(const Function& f, const Function& g, const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw DomainError("sup distance needs lo < hi");
  std::set<Rational> pts{lo, hi};
  for (const auto* h : {&f, &g})
    for (const auto& x : h->breakpoints())
      if (lo <= x && x <= hi) pts.insert(x);
  const int inner = f.piecewise_linear() && g.piecewise_linear() ? 1 : 15;
  std::vector<Rational> knots(pts.begin(), pts.end());
  for (std::size_t i = 0; i + 1 < knots.size(); ++i)
    for (int k = 1; k <= inner; ++k) pts.insert(knots[i] + (knots[i + 1] - knots[i]) * k / (inner + 1));
  Rational best = 0;
  for (const auto& x : pts) best = std::max(best, abs(Rational(f(x) - g(x))));
  return best;
}

// ---------------------------------------------------------------- witnesses

const RepresentableSet& WitnessedFunction::witness(const Rational& x0) const {
  auto it = witnesses.find(x0);
  if (it == witnesses.end()) throw DomainError("no witness registered at " + to_string(x0));
  return it->second;
}

namespace {

RationalIntervalSet kernel_within(const Target& kernel, const Rational& lo, const Rational& hi) {
  if (const auto* s = kernel.interval_set()) return s->intersect(RationalIntervalSet::interval(lo, hi));
  const auto& f = *kernel.family();
  const Rational& a = f.anchor();
  if (a < lo || a > hi) return f.localize(lo, hi);
  const Rational gap = (hi - lo) / 1024;
  RationalIntervalSet out;
  if (lo < a - gap) out = out.unite(f.localize(lo, a - gap));
  if (a + gap < hi) out = out.unite(f.localize(a + gap, hi));
  return out;
}

std::optional<Rational> sample_in(const RepresentableSet& w, const Rational& lo, const Rational& hi) {
  const auto part = kernel_within(w.kernel(), lo, hi);
  const Interval* best = nullptr;
  Rational best_len = 0;
  for (const auto& iv : part.intervals()) {
    const Rational len = iv.hi.value() - iv.lo.value();
    if (len > best_len) {
      best_len = len;
      best = &iv;
    }
  }
  if (!best) return std::nullopt;
  for (int k : {2, 3, 5, 7, 11}) {
    for (int j = 1; j < k; ++j) {
      const Rational p = best->lo.value() + best_len * j / k;
      if (w.contains(p)) return p;
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<Rational> witness_samples(const RepresentableSet& witness, const Rational& x0, const GridSpec& grid) {
  std::vector<Rational> out;
  for (const auto& d : grid.scales()) {
    if (auto p = sample_in(witness, x0 + d / 2, x0 + d)) out.push_back(*p);
    if (auto p = sample_in(witness, x0 - d, x0 - d / 2)) out.push_back(*p);
  }
  return out;
}

ApproxContinuityVerdict check_point_with(const Function& f, const RepresentableSet& witness, const Rational& x0,
                                         const Modulus& g, const GridSpec& grid, const Policy& policy) {
  ApproxContinuityVerdict v;
  v.witness_density = classify_point(g, witness.kernel(), x0, grid, policy);
  const Rational fx0 = f(x0);
  const auto scales = grid.scales();
  const Rational tail_scale = scales[scales.size() - std::min<std::size_t>(scales.size(), policy.window)];
  bool any_tail = false;
  Rational min_left = -1, min_right = -1;  // smallest tail deviation on each side
  for (const auto& p : witness_samples(witness, x0, grid)) {
    const Rational val = f(p);
    const Rational dev = abs(Rational(val - fx0));
    // samples at distance below the tail scale belong to the deepest W scales
    if (abs(Rational(p - x0)) < tail_scale) {
      any_tail = true;
      v.max_tail_deviation = std::max(v.max_tail_deviation, dev);
      Rational& side_min = p < x0 ? min_left : min_right;
      if (side_min < 0 || dev < side_min) side_min = dev;
    }
    v.samples.push_back({p, val, dev});
  }
  if (any_tail) {
    if (v.max_tail_deviation < kAlongTolerance) v.along = AlongLimit::Converges;
    else if (min_left >= kAlongTolerance || min_right >= kAlongTolerance) v.along = AlongLimit::Diverges;
  }
  const Truth d = v.witness_density.density;
  if (d == Truth::Yes && v.along == AlongLimit::Converges) v.overall = Truth::Yes;
  else if (d == Truth::No || v.along == AlongLimit::Diverges) v.overall = Truth::No;
  return v;
}

ApproxContinuityVerdict check_point(const WitnessedFunction& f, const Rational& x0, const Modulus& g,
                                    const GridSpec& grid, const Policy& policy) {
  return check_point_with(f.f, f.witness(x0), x0, g, grid, policy);
}

RepresentableSet combine_witnesses(const RepresentableSet& a, const RepresentableSet& b) {
  RepresentableSet out(a.kernel().intersect(b.kernel()));
  for (const auto& x : a.removed()) out.remove(x);
  for (const auto& x : b.removed()) out.remove(x);
  for (const auto& f : a.removed_families()) out.remove(f);
  for (const auto& f : b.removed_families()) out.remove(f);
  for (const auto& x : a.added())
    if (b.contains(x)) out.add(x);
  for (const auto& x : b.added())
    if (a.contains(x)) out.add(x);
  // added countable families are null; kept only when the other set holds them entirely
  for (const auto& f : a.added_families())
    if (b.kernel().is_interval_set() && b.removed().empty() && b.removed_families().empty() &&
        *b.kernel().interval_set() == RationalIntervalSet::real_line())
      out.add(f);
  for (const auto& f : b.added_families())
    if (a.kernel().is_interval_set() && a.removed().empty() && a.removed_families().empty() &&
        *a.kernel().interval_set() == RationalIntervalSet::real_line())
      out.add(f);
  return out;
}

SumReport sum_is_approx_continuous(const WitnessedFunction& f, const WitnessedFunction& g, const Rational& x0,
                                   const Modulus& gamma, const std::vector<Rational>& scalars,
                                   const GridSpec& grid, const Policy& policy) {
  SumReport r;
  const auto vf = check_point(f, x0, gamma, grid, policy);
  const auto vg = check_point(g, x0, gamma, grid, policy);
  r.precondition = vf.overall == Truth::Yes && vg.overall == Truth::Yes;
  const auto combined = combine_witnesses(f.witness(x0), g.witness(x0));
  r.sum = check_point_with(f.f + g.f, combined, x0, gamma, grid, policy);
  bool ok = r.sum.overall == Truth::Yes;
  for (const auto& c : scalars) {
    auto v = check_point_with(f.f.scaled(c), f.witness(x0), x0, gamma, grid, policy);
    ok = ok && v.overall == Truth::Yes;
    r.multiples.emplace_back(c, std::move(v));
  }
  r.holds = !r.precondition || ok;
  return r;
}

Rational bump_peak(long n) { return Construction::offset(n) + pow4(-(n + 1)) / 2; }

WitnessedFunction build_bump_function(long n_max) {
  WitnessedFunction w{Function::bump_sum(n_max), {}};
  w.witnesses.emplace(Rational(0), RepresentableSet(ScaleFamily::bump_support()));
  return w;
}

ComposeReport compose_continuous(const WitnessedFunction& f, const PiecewisePoly& phi, const Rational& x0,
                                 const Modulus& g, const GridSpec& grid, const Policy& policy) {
  const Rational y0 = f.f(x0);
  if (!phi.continuous_at(y0))
    throw HypothesisError("phi is not continuous at f(x0) = " + to_string(y0));
  ComposeReport r;
  r.before = check_point(f, x0, g, grid, policy);
  r.after = check_point_with(f.f.composed_with(phi), f.witness(x0), x0, g, grid, policy);
  r.holds = r.before.overall != Truth::Yes || r.after.overall == Truth::Yes;
  return r;
}

UniformLimitReport uniform_limit_check(const std::vector<Function>& fs, const Function& f, const Rational& x0,
                                       const std::optional<RepresentableSet>& common_witness, const Modulus& g,
                                       const GridSpec& grid, const Policy& policy) {
  if (!common_witness) throw DomainError("uniform limit check needs a common witness");
  if (fs.empty()) throw DomainError("uniform limit check needs a nonempty sequence");
  UniformLimitReport r;
  r.note = "common witness supplied by the caller; the per-n witnesses of the general argument are not searched";
  Rational lo = x0 - 1, hi = x0 + 1;
  std::vector<const Function*> all{&f};
  for (const auto& fn : fs) all.push_back(&fn);
  for (const auto* h : all)
    for (const auto& x : h->breakpoints()) {
      lo = std::min(lo, x);
      hi = std::max(hi, x);
    }
  bool all_pass = true;
  for (const auto& fn : fs) {
    const auto v = check_point_with(fn, *common_witness, x0, g, grid, policy);
    r.members_pass.push_back(v.overall);
    all_pass = all_pass && v.overall == Truth::Yes;
    r.sup_distances.push_back(sampled_sup_distance(fn, f, lo - 1, hi + 1));
  }
  r.limit = check_point_with(f, *common_witness, x0, g, grid, policy);

  const Function& last = fs.back();
  const Rational& dist = r.sup_distances.back();
  const Rational last_x0 = last(x0);
  r.three_epsilon_bound = true;
  Rational worst = 0;
  for (const auto& s : r.limit.samples) {
    const Rational rhs = 2 * dist + abs(Rational(last(s.x) - last_x0));
    worst = std::max(worst, rhs);
    if (s.deviation > rhs) r.three_epsilon_bound = false;
  }
  r.realized_bound = worst;
  const bool shrinking = r.sup_distances.back() <= r.sup_distances.front();
  r.holds = all_pass && shrinking && r.three_epsilon_bound && r.limit.overall == Truth::Yes;
  return r;
}

std::string to_string(AlongLimit a) {
  switch (a) {
    case AlongLimit::Converges: return "converges";
    case AlongLimit::Diverges: return "diverges";
    case AlongLimit::Undecided: return "undecided";
  }
  return "undecided";
}

}  // namespace gdensity
