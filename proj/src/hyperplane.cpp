#include "curvelift/hyperplane.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "curvelift/error.hpp"
#include "curvelift/random.hpp"

namespace curvelift {

Hyperplane::Hyperplane(Rational a0, std::vector<Rational> normal)
    : a0_(std::move(a0)), a_(std::move(normal)) {
  require(!a_.empty(), ErrorCode::kInvalidDimension, "hyperplane needs at least one coefficient");
  Rational scale = 0;
  for (const auto& c : a_) scale = std::max<Rational>(scale, abs(c));
  require(scale > 0, ErrorCode::kInvalidArgument, "hyperplane normal must be nonzero");
  a0_ /= scale;
  for (auto& c : a_) c /= scale;
}

namespace {

// Numerator of g(t) = Σ a_i γ_i(t) - a_0 (denominators are nonvanishing on
// the domain for rational curves, so roots coincide).
Polynomial restriction_numerator(const CurveSpec& curve, const Hyperplane& plane) {
  const auto& nums = curve.coordinates();
  const auto& a = plane.normal();
  if (curve.is_polynomial()) {
    Polynomial g = Polynomial(-plane.offset());
    for (std::size_t i = 0; i < a.size(); ++i) g = g + nums[i] * a[i];
    return g;
  }
  const auto& dens = curve.denominators();
  Polynomial all(Rational(1));
  for (const auto& q : dens) all = all * q;
  Polynomial g = all * (-plane.offset());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    Polynomial term = nums[i] * a[i];
    for (std::size_t j = 0; j < dens.size(); ++j) {
      if (j != i) term = term * dens[j];
    }
    g = g + term;
  }
  return g;
}

// Multiplicity of the unique root of g inside [lo, hi].
int multiplicity(const Polynomial& g, const RootInterval& root) {
  int m = 1;
  Polynomial common = g;
  Polynomial deriv = g;
  while (true) {
    deriv = deriv.derivative(1);
    if (deriv.is_zero()) return m;
    common = gcd(common, deriv);
    if (common.degree() < 1) return m;
    if (isolate_real_roots(common, root.lo, root.hi).empty()) return m;
    ++m;
  }
}

IntersectionResult exact_intersect(const CurveSpec& curve, const Hyperplane& plane) {
  IntersectionResult r;
  r.exact = true;
  const Polynomial g = restriction_numerator(curve, plane);
  if (g.is_zero()) {
    r.contained = true;
    return r;
  }
  for (const auto& root : isolate_real_roots(g, curve.t_lo(), curve.t_hi())) {
    IntersectionRoot out;
    out.t = root.approx;
    out.lo = root.lo;
    out.hi = root.hi;
    out.tangential = multiplicity(g, root) % 2 == 0;
    r.roots.push_back(std::move(out));
  }
  return r;
}

class FloatingRestriction {
 public:
  FloatingRestriction(const CurveSpec& curve, const Hyperplane& plane)
      : curve_(curve), n_(static_cast<std::size_t>(curve.dimension())), buf_(2 * n_) {
    for (const auto& c : plane.normal()) a_.push_back(c.get_d());
    a0_ = plane.offset().get_d();
  }

  double value(double t) {
    curve_.evaluate(t, 0, buf_);
    double g = -a0_;
    for (std::size_t i = 0; i < n_; ++i) g += a_[i] * buf_[i];
    return g;
  }

  double slope(double t) {
    curve_.evaluate(t, 1, buf_);
    double g = 0.0;
    for (std::size_t i = 0; i < n_; ++i) g += a_[i] * buf_[n_ + i];
    return g;
  }

  // Magnitude of the terms of g, for zero tolerances.
  double scale(double t) {
    curve_.evaluate(t, 0, buf_);
    double s = std::abs(a0_);
    for (std::size_t i = 0; i < n_; ++i) s += std::abs(a_[i] * buf_[i]);
    return s;
  }

  template <class F>
  static double bisect(F&& f, double lo, double hi) {
    double flo = f(lo);
    for (int it = 0; it < 200 && hi - lo > 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(lo)); ++it) {
      const double mid = 0.5 * (lo + hi);
      const double fm = f(mid);
      if (fm == 0.0) return mid;
      if ((fm < 0.0) == (flo < 0.0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    return 0.5 * (lo + hi);
  }

 private:
  const CurveSpec& curve_;
  std::size_t n_;
  std::vector<double> buf_;
  std::vector<double> a_;
  double a0_ = 0.0;
};

IntersectionResult floating_intersect(const CurveSpec& curve, const Hyperplane& plane, int grid) {
  require(grid >= 2, ErrorCode::kInvalidArgument, "intersection grid must be >= 2");
  IntersectionResult r;
  FloatingRestriction g(curve, plane);
  const double lo = curve.t_lo().get_d();
  const double hi = curve.t_hi().get_d();
  std::vector<double> ts(static_cast<std::size_t>(grid) + 1), gs(ts.size());
  for (std::size_t j = 0; j < ts.size(); ++j) {
    ts[j] = j + 1 == ts.size() ? hi : lo + (hi - lo) * static_cast<double>(j) / grid;
    gs[j] = g.value(ts[j]);
  }
  auto value = [&](double t) { return g.value(t); };
  auto slope = [&](double t) { return g.slope(t); };
  std::vector<IntersectionRoot> roots;
  auto add = [&](double t, bool tangential) {
    roots.push_back(IntersectionRoot{t, std::nullopt, std::nullopt, tangential});
  };
  for (std::size_t j = 0; j < ts.size(); ++j) {
    if (gs[j] == 0.0) {
      const bool touch = j > 0 && j + 1 < ts.size() && gs[j - 1] != 0.0 &&
                         (gs[j - 1] < 0.0) == (gs[j + 1] < 0.0) && gs[j + 1] != 0.0;
      add(ts[j], touch);
      continue;
    }
    if (j + 1 < ts.size() && gs[j + 1] != 0.0 && (gs[j] < 0.0) != (gs[j + 1] < 0.0)) {
      add(FloatingRestriction::bisect(value, ts[j], ts[j + 1]), false);
    }
    // A local minimum of |g| between samples may hide a touching point or a
    // pair of roots closer than the grid spacing.
    if (j == 0 || j + 1 == ts.size()) continue;
    const bool same_sign = (gs[j - 1] < 0.0) == (gs[j] < 0.0) && (gs[j] < 0.0) == (gs[j + 1] < 0.0);
    if (!same_sign || gs[j - 1] == 0.0 || gs[j + 1] == 0.0) continue;
    if (!(std::abs(gs[j]) < std::abs(gs[j - 1]) && std::abs(gs[j]) <= std::abs(gs[j + 1]))) continue;
    const double sa = slope(ts[j - 1]);
    const double sb = slope(ts[j + 1]);
    if ((sa < 0.0) == (sb < 0.0)) continue;
    const double t_star = FloatingRestriction::bisect(slope, ts[j - 1], ts[j + 1]);
    const double g_star = g.value(t_star);
    const double tol = 1e-12 * std::max(1.0, g.scale(t_star));
    if (std::abs(g_star) <= tol) {
      add(t_star, true);
      r.certified = false;
    } else if ((g_star < 0.0) != (gs[j] < 0.0)) {
      add(FloatingRestriction::bisect(value, ts[j - 1], t_star), false);
      add(FloatingRestriction::bisect(value, t_star, ts[j + 1]), false);
      r.certified = false;
    }
  }
  std::sort(roots.begin(), roots.end(),
            [](const IntersectionRoot& x, const IntersectionRoot& y) { return x.t < y.t; });
  for (const auto& root : roots) {
    if (!r.roots.empty() && std::abs(root.t - r.roots.back().t) <= 1e-12 * std::max(1.0, std::abs(root.t))) {
      continue;
    }
    r.roots.push_back(root);
  }
  return r;
}

}  // namespace

IntersectionResult intersect(const CurveSpec& curve, const Hyperplane& plane, int grid) {
  require(plane.dimension() == static_cast<std::size_t>(curve.dimension()),
          ErrorCode::kInvalidDimension, "hyperplane and curve dimensions differ");
  if (curve.is_exact()) return exact_intersect(curve, plane);
  return floating_intersect(curve, plane, grid);
}

CurveSpec derivative_curve(const CurveSpec& graph) {
  require(graph.is_exact() && graph.is_graph_form(), ErrorCode::kInvalidForm,
          "derivative curve needs an exact curve of graph form (t, f_2, ..., f_n)");
  require(graph.dimension() >= 2, ErrorCode::kInvalidDimension,
          "derivative curve needs dimension >= 2");
  const int order = graph.smoothness_order() - 1;
  const auto& nums = graph.coordinates();
  if (graph.is_polynomial()) {
    std::vector<Polynomial> coords;
    for (std::size_t i = 1; i < nums.size(); ++i) coords.push_back(nums[i].derivative(1));
    return CurveSpec::polynomial(CurveKind::kPolynomialParametric, std::move(coords), graph.t_lo(),
                                 graph.t_hi(), order);
  }
  const auto& dens = graph.denominators();
  std::vector<Polynomial> out_nums, out_dens;
  for (std::size_t i = 1; i < nums.size(); ++i) {
    out_nums.push_back(nums[i].derivative(1) * dens[i] - nums[i] * dens[i].derivative(1));
    out_dens.push_back(dens[i] * dens[i]);
  }
  return CurveSpec::rational(std::move(out_nums), std::move(out_dens), graph.t_lo(), graph.t_hi(),
                             order);
}

CurveSpec to_graph_form(const CurveSpec& curve) {
  if (curve.is_graph_form()) return curve;
  require(curve.is_polynomial() && curve.coordinates()[0].degree() == 1, ErrorCode::kInvalidForm,
          "only polynomial curves with an affine, non-constant first coordinate can be "
          "reparameterized as graphs");
  const Polynomial& x = curve.coordinates()[0];
  const Rational c0 = x.coefficient(0);
  const Rational c1 = x.coefficient(1);
  // t = (x - c0) / c1.
  const Polynomial inner({-c0 / c1, Rational(1) / c1});
  std::vector<Polynomial> coords;
  for (const auto& p : curve.coordinates()) coords.push_back(p.compose(inner));
  Rational lo = x(curve.t_lo());
  Rational hi = x(curve.t_hi());
  if (lo > hi) std::swap(lo, hi);
  return CurveSpec::polynomial(CurveKind::kPolynomialGraph, std::move(coords), lo, hi,
                               curve.smoothness_order());
}

Hyperplane random_hyperplane(std::size_t dimension, std::mt19937_64& rng) {
  while (true) {
    const Rational a0 = uniform_unit_rational(rng);
    std::vector<Rational> a;
    bool nonzero = false;
    for (std::size_t i = 0; i < dimension; ++i) {
      a.push_back(uniform_unit_rational(rng));
      nonzero = nonzero || a.back() != 0;
    }
    if (nonzero) return Hyperplane(a0, std::move(a));
  }
}

IntersectionEstimate max_intersections(const CurveSpec& curve, int trials, std::uint64_t seed,
                                       int grid) {
  require(trials >= 1, ErrorCode::kInvalidArgument, "trials must be >= 1");
  IntersectionEstimate e;
  e.trials = trials;
  e.seed = seed;
  std::mt19937_64 rng(seed);
  for (int i = 0; i < trials; ++i) {
    Hyperplane h = random_hyperplane(static_cast<std::size_t>(curve.dimension()), rng);
    const auto r = intersect(curve, h, grid);
    e.all_certified = e.all_certified && r.certified;
    if (r.contained) continue;
    if (!e.witness || r.roots.size() > e.max_count) {
      e.max_count = r.roots.size();
      e.witness = h;
    }
  }
  return e;
}

MvtReport check_mean_value(const CurveSpec& graph, const Hyperplane& plane, int grid) {
  MvtReport report;
  const auto base = intersect(graph, plane, grid);
  report.roots = base.roots.size();
  const auto& a = plane.normal();
  std::vector<Rational> tail(a.begin() + 1, a.end());
  const bool flat = std::all_of(tail.begin(), tail.end(), [](const Rational& c) { return c == 0; });
  if (flat) {
    // g' is the constant a_1: at most one root unless g vanishes identically.
    report.holds = base.roots.size() <= 1 || base.contained;
    return report;
  }
  const auto deriv = intersect(derivative_curve(graph), Hyperplane(-a[0], std::move(tail)), grid);
  if (deriv.contained) {
    report.holds = true;
    return report;
  }
  report.derivative_roots = deriv.roots.size();
  for (std::size_t i = 0; i + 1 < base.roots.size(); ++i) {
    const double lo = base.roots[i].t;
    const double hi = base.roots[i + 1].t;
    const bool found = std::any_of(deriv.roots.begin(), deriv.roots.end(), [&](const IntersectionRoot& d) {
      return d.t > lo && d.t < hi;
    });
    report.holds = report.holds && found;
  }
  return report;
}

}  // namespace curvelift
