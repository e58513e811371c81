#include "curvelift/tube.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

#include "curvelift/error.hpp"

namespace curvelift {

Rational scaled_delta(const Rational& d, std::uint64_t n_scale, unsigned exponent) {
  require(d > 0, ErrorCode::kInvalidArgument, "scale constant d must be positive");
  require(n_scale >= 1, ErrorCode::kInvalidArgument, "N must be >= 1");
  return d / Rational(pow(Integer(std::to_string(n_scale)), exponent));
}

LatticeSource unit_box_lattice(std::uint64_t n, std::size_t dim) {
  return LatticeSource{n, std::vector<Rational>(dim, 0), std::vector<Rational>(dim, 1)};
}

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kInitialArcs = 64;
constexpr int kArcSamples = 4;
constexpr int kOracleSegments = 512;
constexpr std::uint64_t kOracleSamplesPerSegment = 1u << 20;

struct CellHash {
  std::size_t operator()(const std::vector<std::int64_t>& v) const noexcept {
    std::size_t h = 0x84222325cbf29ce4ull;
    for (auto x : v) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ull;
    return h;
  }
};

Integer ceil_times(const Rational& x, const Integer& n) {
  Integer out;
  Integer num = x.get_num() * n;
  mpz_cdiv_q(out.get_mpz_t(), num.get_mpz_t(), x.get_den_mpz_t());
  return out;
}

Integer floor_times(const Rational& x, const Integer& n) {
  Integer out;
  Integer num = x.get_num() * n;
  mpz_fdiv_q(out.get_mpz_t(), num.get_mpz_t(), x.get_den_mpz_t());
  return out;
}

// Uniform view of the three source kinds. Every point gets a dense uint64 id.
class SourceView {
 public:
  SourceView(const TubeSource& source, std::size_t dim, double delta, const WorkCaps& caps)
      : dim_(dim) {
    if (const auto* lat = std::get_if<LatticeSource>(&source)) {
      init_lattice(*lat);
    } else if (const auto* set = std::get_if<FiniteSet>(&source)) {
      init_points(set->points(), delta);
    } else {
      init_points(gap_enumerate(std::get<Gap>(source), caps).points(), delta);
    }
  }

  bool lattice() const { return lattice_; }
  std::uint64_t size() const { return size_; }
  double spacing() const { return spacing_; }

  void coords(std::uint64_t id, double* out) const {
    if (lattice_) {
      for (std::size_t i = 0; i < dim_; ++i) {
        const std::int64_t k = k_lo_[i] + static_cast<std::int64_t>((id / stride_[i]) % extent_[i]);
        out[i] = static_cast<double>(k) / n_double_;
      }
    } else {
      std::copy_n(coords_.begin() + static_cast<std::ptrdiff_t>(id * dim_), dim_, out);
    }
  }

  ExactPoint exact(std::uint64_t id) const {
    if (!lattice_) return points_[id];
    ExactPoint p;
    for (std::size_t i = 0; i < dim_; ++i) {
      const std::int64_t k = k_lo_[i] + static_cast<std::int64_t>((id / stride_[i]) % extent_[i]);
      Rational r(Integer(std::to_string(k)), n_);
      r.canonicalize();
      p.coords.push_back(std::move(r));
    }
    return p;
  }

  // Calls fn(id) for every point whose coordinates may lie in [lo, hi].
  template <class Fn>
  void for_each_in_box(const std::vector<double>& lo, const std::vector<double>& hi, Fn&& fn) const {
    if (size_ == 0) return;
    if (lattice_) {
      std::vector<std::int64_t> a(dim_), b(dim_);
      for (std::size_t i = 0; i < dim_; ++i) {
        const double kl = std::floor(lo[i] * n_double_) - 1;
        const double kh = std::ceil(hi[i] * n_double_) + 1;
        a[i] = std::max<std::int64_t>(k_lo_[i], static_cast<std::int64_t>(std::max(kl, -9e18)));
        b[i] = std::min<std::int64_t>(k_lo_[i] + static_cast<std::int64_t>(extent_[i]) - 1,
                                      static_cast<std::int64_t>(std::min(kh, 9e18)));
        if (a[i] > b[i]) return;
      }
      std::vector<std::int64_t> k = a;
      while (true) {
        std::uint64_t id = 0;
        for (std::size_t i = 0; i < dim_; ++i) {
          id += static_cast<std::uint64_t>(k[i] - k_lo_[i]) * stride_[i];
        }
        fn(id);
        std::size_t i = 0;
        for (; i < dim_; ++i) {
          if (++k[i] <= b[i]) break;
          k[i] = a[i];
        }
        if (i == dim_) return;
      }
    }
    std::vector<std::int64_t> a(dim_), b(dim_);
    double cells = 1.0;
    for (std::size_t i = 0; i < dim_; ++i) {
      a[i] = static_cast<std::int64_t>(std::floor(std::max(lo[i], box_lo_[i]) / cell_)) - 1;
      b[i] = static_cast<std::int64_t>(std::floor(std::min(hi[i], box_hi_[i]) / cell_)) + 1;
      if (a[i] > b[i]) return;
      cells *= static_cast<double>(b[i] - a[i] + 1);
    }
    if (cells >= static_cast<double>(size_)) {
      for (std::uint64_t id = 0; id < size_; ++id) fn(id);
      return;
    }
    std::vector<std::int64_t> k = a;
    while (true) {
      auto it = grid_.find(k);
      if (it != grid_.end()) {
        for (auto id : it->second) fn(id);
      }
      std::size_t i = 0;
      for (; i < dim_; ++i) {
        if (++k[i] <= b[i]) break;
        k[i] = a[i];
      }
      if (i == dim_) return;
    }
  }

 private:
  void init_lattice(const LatticeSource& lat) {
    require(lat.n >= 1, ErrorCode::kInvalidArgument, "lattice scale N must be >= 1");
    require(lat.lo.size() == dim_ && lat.hi.size() == dim_, ErrorCode::kInvalidArgument,
            "lattice box needs bounds for every coordinate of the curve");
    lattice_ = true;
    n_ = Integer(std::to_string(lat.n));
    n_double_ = static_cast<double>(lat.n);
    spacing_ = 1.0 / n_double_;
    size_ = 1;
    for (std::size_t i = 0; i < dim_; ++i) {
      require(lat.lo[i] <= lat.hi[i], ErrorCode::kInvalidArgument, "empty lattice box");
      const Integer lo = ceil_times(lat.lo[i], n_);
      const Integer hi = floor_times(lat.hi[i], n_);
      require(lo.fits_slong_p() && hi.fits_slong_p(), ErrorCode::kCapExceeded,
              "lattice box is too large");
      k_lo_.push_back(lo.get_si());
      const std::uint64_t extent = hi >= lo ? static_cast<std::uint64_t>(hi.get_si() - lo.get_si()) + 1 : 0;
      extent_.push_back(extent);
      stride_.push_back(size_);
      if (extent == 0) {
        size_ = 0;
        break;
      }
      require(size_ <= std::numeric_limits<std::uint64_t>::max() / extent, ErrorCode::kCapExceeded,
              "lattice box has too many points to index");
      size_ *= extent;
    }
  }

  void init_points(const std::vector<ExactPoint>& points, double delta) {
    points_ = points;
    size_ = points_.size();
    if (size_ == 0) return;
    require(points_.front().dimension() == dim_, ErrorCode::kInvalidDimension,
            "source points must have the curve's dimension");
    box_lo_.assign(dim_, std::numeric_limits<double>::infinity());
    box_hi_.assign(dim_, -std::numeric_limits<double>::infinity());
    for (const auto& p : points_) {
      for (std::size_t i = 0; i < dim_; ++i) {
        const double v = p[i].get_d();
        coords_.push_back(v);
        box_lo_[i] = std::min(box_lo_[i], v);
        box_hi_[i] = std::max(box_hi_[i], v);
      }
    }
    // Typical spacing from the bounding-box density.
    double volume = 1.0;
    double span = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
      volume *= std::max(box_hi_[i] - box_lo_[i], 1e-300);
      span = std::max(span, box_hi_[i] - box_lo_[i]);
    }
    spacing_ = size_ >= 2 ? std::pow(volume / static_cast<double>(size_), 1.0 / static_cast<double>(dim_)) : 0.0;
    cell_ = std::max({delta, spacing_, span * 1e-6, 1e-300});
    for (std::uint64_t id = 0; id < size_; ++id) {
      std::vector<std::int64_t> key(dim_);
      for (std::size_t i = 0; i < dim_; ++i) {
        key[i] = static_cast<std::int64_t>(std::floor(coords_[id * dim_ + i] / cell_));
      }
      grid_[key].push_back(id);
    }
  }

  std::size_t dim_;
  bool lattice_ = false;
  std::uint64_t size_ = 0;
  double spacing_ = 0.0;
  // Lattice.
  Integer n_ = 1;
  double n_double_ = 1.0;
  std::vector<std::int64_t> k_lo_;
  std::vector<std::uint64_t> extent_;
  std::vector<std::uint64_t> stride_;
  // Explicit points.
  std::vector<ExactPoint> points_;
  std::vector<double> coords_;
  std::vector<double> box_lo_, box_hi_;
  double cell_ = 1.0;
  std::unordered_map<std::vector<std::int64_t>, std::vector<std::uint64_t>, CellHash> grid_;
};

double norm_inf(const double* p, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::abs(p[i]));
  return m;
}

// Half-width of the band around delta inside which a floating distance
// cannot be trusted.
double ambiguity_band(double delta, const double* p, std::size_t n) {
  return std::max(1e-9 * delta, 256.0 * kEps * (1.0 + norm_inf(p, n)));
}

// Upper bound for |γ''| on the domain.
double second_derivative_bound(const CurveSpec& curve) {
  const std::size_t n = static_cast<std::size_t>(curve.dimension());
  if (curve.is_polynomial()) {
    const double r = std::max(std::abs(curve.t_lo().get_d()), std::abs(curve.t_hi().get_d()));
    double total = 0.0;
    for (const auto& p : curve.coordinates()) {
      double bound = 0.0;
      const auto& c = p.coefficients();
      for (std::size_t k = 2; k < c.size(); ++k) {
        bound += std::abs(c[k].get_d()) * static_cast<double>(k * (k - 1)) *
                 std::pow(r, static_cast<double>(k - 2));
      }
      total += bound * bound;
    }
    return std::sqrt(total) * (1.0 + 1e-12);
  }
  // Dense sampling with a safety factor for the rest.
  const double lo = curve.t_lo().get_d();
  const double hi = curve.t_hi().get_d();
  std::vector<double> buf(3 * n);
  double best = 0.0;
  constexpr int kSamples = 8192;
  for (int i = 0; i <= kSamples; ++i) {
    curve.evaluate(lo + (hi - lo) * i / kSamples, 2, buf);
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += buf[2 * n + j] * buf[2 * n + j];
    best = std::max(best, std::sqrt(s));
  }
  return 2.0 * best + 1e-12;
}

double max_speed(const CurveSpec& curve) {
  const std::size_t n = static_cast<std::size_t>(curve.dimension());
  const double lo = curve.t_lo().get_d();
  const double hi = curve.t_hi().get_d();
  std::vector<double> buf(2 * n);
  double best = 0.0;
  constexpr int kSamples = 8192;
  for (int i = 0; i <= kSamples; ++i) {
    curve.evaluate(lo + (hi - lo) * i / kSamples, 1, buf);
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += buf[n + j] * buf[n + j];
    best = std::max(best, std::sqrt(s));
  }
  // Speed varies slowly relative to the sample spacing for the supported
  // kinds; the factor covers the gap between samples.
  return 1.25 * best + 1e-12;
}

double distance(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

struct Arc {
  double a, b;
  std::vector<double> pa, pb;
  double sagitta;
};

std::vector<Arc> subdivide(const CurveSpec& curve, double h, double m2, std::uint64_t cap) {
  const std::size_t n = static_cast<std::size_t>(curve.dimension());
  const double lo = curve.t_lo().get_d();
  const double hi = curve.t_hi().get_d();
  const double min_width = (hi - lo) * 1e-12;
  auto point = [&](double t) {
    std::vector<double> p(n);
    curve.evaluate(t, 0, p);
    return p;
  };
  std::vector<Arc> done;
  std::vector<Arc> stack;
  for (int i = kInitialArcs - 1; i >= 0; --i) {
    const double a = lo + (hi - lo) * i / kInitialArcs;
    const double b = i + 1 == kInitialArcs ? hi : lo + (hi - lo) * (i + 1) / kInitialArcs;
    stack.push_back({a, b, point(a), point(b), (b - a) * (b - a) / 8.0 * m2});
  }
  while (!stack.empty()) {
    Arc arc = std::move(stack.back());
    stack.pop_back();
    const double chord = distance(arc.pa.data(), arc.pb.data(), n);
    if ((chord <= h && arc.sagitta <= h) || arc.b - arc.a <= min_width) {
      done.push_back(std::move(arc));
      require(done.size() <= cap, ErrorCode::kCapExceeded, "tube arc count exceeds the cap");
      continue;
    }
    const double mid = 0.5 * (arc.a + arc.b);
    auto pm = point(mid);
    const double sag = (mid - arc.a) * (mid - arc.a) / 8.0 * m2;
    stack.push_back({mid, arc.b, pm, std::move(arc.pb), sag});
    stack.push_back({arc.a, mid, std::move(arc.pa), std::move(pm), sag});
  }
  return done;
}

// min over t in [a, b] of |γ(t) - p|, via sign changes of f'(t) = 2(γ - p)·γ'
// on a few samples and bisection on each.
class ArcDistance {
 public:
  explicit ArcDistance(const CurveSpec& curve)
      : curve_(curve), n_(static_cast<std::size_t>(curve.dimension())), buf_(2 * n_) {}

  double operator()(const double* p, double a, double b) {
    double best = std::numeric_limits<double>::infinity();
    double prev_t = a;
    double prev_g = 0.0;
    for (int j = 0; j <= kArcSamples; ++j) {
      const double t = j == kArcSamples ? b : a + (b - a) * j / kArcSamples;
      const auto [f, g] = eval(t, p);
      best = std::min(best, f);
      if (j > 0 && prev_g < 0.0 && g > 0.0) best = std::min(best, bisect(prev_t, t, p));
      prev_t = t;
      prev_g = g;
    }
    return std::sqrt(best);
  }

 private:
  std::pair<double, double> eval(double t, const double* p) {
    curve_.evaluate(t, 1, buf_);
    double f = 0.0, g = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
      const double d = buf_[i] - p[i];
      f += d * d;
      g += d * buf_[n_ + i];
    }
    return {f, 2.0 * g};
  }

  double bisect(double lo, double hi, const double* p) {
    double best = std::numeric_limits<double>::infinity();
    for (int it = 0; it < 200 && hi - lo > 2.0 * kEps * std::max(1.0, std::abs(lo)); ++it) {
      const double mid = 0.5 * (lo + hi);
      const auto [f, g] = eval(mid, p);
      best = std::min(best, f);
      if (g < 0.0) {
        lo = mid;
      } else if (g > 0.0) {
        hi = mid;
      } else {
        break;
      }
    }
    return best;
  }

  const CurveSpec& curve_;
  std::size_t n_;
  std::vector<double> buf_;
};

// Exact decision of dist(p, Γ) <= δ via the sign of |γ(t) - p|^2 - δ^2 on
// the domain. Requires an exact curve.
bool exact_inside(const CurveSpec& curve, const ExactPoint& p, const Rational& delta) {
  const auto& nums = curve.coordinates();
  const std::size_t n = nums.size();
  const Rational delta2 = delta * delta;
  Polynomial d;
  if (curve.is_polynomial()) {
    for (std::size_t i = 0; i < n; ++i) d = d + pow(nums[i] - Polynomial(p[i]), 2);
    d = d - Polynomial(delta2);
  } else {
    // Clear the positive common factor Π q_j^2.
    const auto& dens = curve.denominators();
    std::vector<Polynomial> q2;
    for (const auto& q : dens) q2.push_back(q * q);
    Polynomial all(Rational(1));
    for (const auto& q : q2) all = all * q;
    for (std::size_t i = 0; i < n; ++i) {
      Polynomial term = pow(nums[i] - dens[i] * p[i], 2);
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) term = term * q2[j];
      }
      d = d + term;
    }
    d = d - all * delta2;
  }
  if (d.is_zero()) return true;
  if (!isolate_real_roots(d, curve.t_lo(), curve.t_hi()).empty()) return true;
  return d(curve.t_lo()) <= 0;
}

void validate_query(const TubeQuery& q) {
  require(q.delta > 0, ErrorCode::kInvalidArgument, "tube radius must be positive");
}

struct Classified {
  std::uint64_t id;
  double best;
  double band;
};

CountResult finish(const TubeQuery& q, const SourceView& source,
                   std::vector<Classified> near, double delta) {
  CountResult r;
  std::vector<ExactPoint> matched;
  for (const auto& c : near) {
    bool inside;
    if (c.best <= delta - c.band) {
      inside = true;
    } else if (c.best >= delta + c.band) {
      inside = false;
    } else {
      ++r.ambiguous;
      if (q.curve.is_exact()) {
        inside = exact_inside(q.curve, source.exact(c.id), q.delta);
        ++r.resolved_exactly;
      } else {
        inside = c.best <= delta;
        r.certified = false;
      }
    }
    if (!inside) continue;
    ++r.count;
    if (q.retain_points) matched.push_back(source.exact(c.id));
  }
  if (q.retain_points) {
    std::sort(matched.begin(), matched.end());
    r.points = std::move(matched);
  }
  return r;
}

}  // namespace

CountResult count_in_tube(const TubeQuery& q) {
  validate_query(q);
  const std::size_t n = static_cast<std::size_t>(q.curve.dimension());
  const double delta = q.delta.get_d();
  SourceView source(q.source, n, delta, q.caps);
  const double h = std::max(delta, source.spacing());
  const double m2 = second_derivative_bound(q.curve);
  const auto arcs = subdivide(q.curve, h, m2, q.caps.enumeration);

  struct State {
    double best = std::numeric_limits<double>::infinity();
    double band = 0.0;
  };
  std::unordered_map<std::uint64_t, State> states;
  ArcDistance arc_distance(q.curve);
  std::vector<double> lo(n), hi(n), p(n);
  std::uint64_t work = 0;
  for (const auto& arc : arcs) {
    const double reach = delta * (1.0 + 1e-6) + arc.sagitta + 1e-12;
    for (std::size_t i = 0; i < n; ++i) {
      lo[i] = std::min(arc.pa[i], arc.pb[i]) - reach;
      hi[i] = std::max(arc.pa[i], arc.pb[i]) + reach;
    }
    source.for_each_in_box(lo, hi, [&](std::uint64_t id) {
      require(++work <= q.caps.energy, ErrorCode::kCapExceeded,
              "tube candidate work exceeds the cap");
      auto [it, fresh] = states.try_emplace(id);
      State& s = it->second;
      source.coords(id, p.data());
      if (fresh) s.band = ambiguity_band(delta, p.data(), n);
      if (s.best <= delta - s.band) return;
      // Distance from p to the arc's enclosing box.
      double gap2 = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        const double g = std::max({lo[i] + reach - p[i], p[i] - hi[i] + reach, 0.0});
        gap2 += g * g;
      }
      if (std::sqrt(gap2) - arc.sagitta > delta + s.band) return;
      s.best = std::min(s.best, arc_distance(p.data(), arc.a, arc.b));
    });
  }
  std::vector<Classified> near;
  near.reserve(states.size());
  for (const auto& [id, s] : states) near.push_back({id, s.best, s.band});
  CountResult r = finish(q, source, std::move(near), delta);
  r.arcs_examined = arcs.size();
  return r;
}

FiniteSet count_on_curve_lattice(const CurveSpec& graph, std::uint64_t n, const Rational& x_lo,
                                 const Rational& x_hi) {
  require(graph.dimension() == 2 && graph.is_polynomial() && graph.is_graph_form(),
          ErrorCode::kInvalidForm, "on-curve enumeration needs a polynomial graph y = f(x)");
  require(n >= 1, ErrorCode::kInvalidArgument, "N must be >= 1");
  const Integer big_n(std::to_string(n));
  const Rational lo = std::max(x_lo, graph.t_lo());
  const Rational hi = std::min(x_hi, graph.t_hi());
  std::vector<ExactPoint> out;
  if (lo > hi) return FiniteSet();
  const Polynomial& f = graph.coordinates()[1];
  for (Integer k = ceil_times(lo, big_n), last = floor_times(hi, big_n); k <= last; ++k) {
    Rational x(k, big_n);
    x.canonicalize();
    Rational y = f(x);
    if (mpz_divisible_p(big_n.get_mpz_t(), y.get_den_mpz_t()) != 0) {
      out.push_back(ExactPoint{{x, y}});
    }
  }
  return FiniteSet(std::move(out));
}

FiniteSet count_on_curve_lattice(const CurveSpec& graph, std::uint64_t n) {
  return count_on_curve_lattice(graph, n, graph.t_lo(), graph.t_hi());
}

CountResult brute_force_tube_oracle(const TubeQuery& q) {
  validate_query(q);
  const std::size_t n = static_cast<std::size_t>(q.curve.dimension());
  const double delta = q.delta.get_d();
  SourceView source(q.source, n, delta, q.caps);
  require(source.size() <= 1'000'000, ErrorCode::kCapExceeded,
          "oracle source is limited to 10^6 points");

  const double t_lo = q.curve.t_lo().get_d();
  const double t_hi = q.curve.t_hi().get_d();
  const double vmax = max_speed(q.curve);
  const double seg_dt = (t_hi - t_lo) / kOracleSegments;
  const double seg_len = vmax * seg_dt;
  // Fine step: delta / 100 in arclength.
  const double fine_dt = delta / (100.0 * vmax);
  std::uint64_t per_segment = static_cast<std::uint64_t>(std::ceil(seg_dt / fine_dt));
  bool resolution_met = true;
  if (per_segment > kOracleSamplesPerSegment) {
    per_segment = kOracleSamplesPerSegment;
    resolution_met = false;
  }
  per_segment = std::max<std::uint64_t>(per_segment, 1);

  std::vector<std::vector<double>> knots(kOracleSegments + 1, std::vector<double>(n));
  for (int i = 0; i <= kOracleSegments; ++i) {
    const double t = i == kOracleSegments ? t_hi : t_lo + seg_dt * i;
    q.curve.evaluate(t, 0, knots[i]);
  }
  std::vector<double> p(n), g(n);
  auto f = [&](double t) {
    q.curve.evaluate(t, 0, g);
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += (g[i] - p[i]) * (g[i] - p[i]);
    return s;
  };

  std::vector<Classified> near;
  for (std::uint64_t id = 0; id < source.size(); ++id) {
    source.coords(id, p.data());
    const double band = ambiguity_band(delta, p.data(), n);
    double best = std::numeric_limits<double>::infinity();
    double best_t = t_lo;
    for (int s = 0; s < kOracleSegments; ++s) {
      const double lb = std::min(distance(p.data(), knots[s].data(), n),
                                 distance(p.data(), knots[s + 1].data(), n)) - 0.5 * seg_len;
      if (lb > delta + band) continue;
      const double a = t_lo + seg_dt * s;
      const double step = seg_dt / static_cast<double>(per_segment);
      for (std::uint64_t j = 0; j <= per_segment; ++j) {
        const double t = j == per_segment ? (s + 1 == kOracleSegments ? t_hi : a + seg_dt)
                                          : a + step * static_cast<double>(j);
        const double v = f(t);
        if (v < best) {
          best = v;
          best_t = t;
        }
      }
    }
    if (!std::isfinite(best)) continue;
    // Golden-section refinement around the best sample.
    const double step = seg_dt / static_cast<double>(per_segment);
    double a = std::max(t_lo, best_t - step);
    double b = std::min(t_hi, best_t + step);
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    for (int it = 0; it < 120 && b - a > kEps * std::max(1.0, std::abs(a)); ++it) {
      if (fc < fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - inv_phi * (b - a);
        fc = f(c);
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + inv_phi * (b - a);
        fd = f(d);
      }
    }
    best = std::min({best, fc, fd});
    near.push_back({id, std::sqrt(best), band});
  }
  CountResult r = finish(q, source, std::move(near), delta);
  r.arcs_examined = kOracleSegments;
  if (!resolution_met) r.certified = false;
  return r;
}

}  // namespace curvelift
