#include "curvelift/experiments.hpp"

#include <chrono>
#include <cmath>
#include <set>

#include "curvelift/error.hpp"
#include "curvelift/io.hpp"
#include "curvelift/lifting.hpp"
#include "curvelift/random.hpp"
#include "curvelift/tube.hpp"

namespace curvelift {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

LatticeSource lattice_for(const ExperimentConfig& cfg, std::uint64_t n) {
  if (cfg.box_lo.empty()) {
    return unit_box_lattice(n, static_cast<std::size_t>(cfg.curve.dimension()));
  }
  return LatticeSource{n, cfg.box_lo, cfg.box_hi};
}

bool in_box(const ExactPoint& p, const ExperimentConfig& cfg) {
  for (std::size_t i = 0; i < cfg.box_lo.size(); ++i) {
    if (p[i] < cfg.box_lo[i] || p[i] > cfg.box_hi[i]) return false;
  }
  return true;
}

// Points of the experiment set for one N, plus the δ used and whether the
// count is certified.
struct Sample {
  Rational delta;
  std::uint64_t count = 0;
  bool certified = true;
  std::optional<FiniteSet> points;
};

Sample sample(const ExperimentConfig& cfg, std::uint64_t n, bool keep_points) {
  Sample s;
  if (cfg.on_curve) {
    s.delta = 0;
    FiniteSet on = cfg.box_lo.empty() ? count_on_curve_lattice(cfg.curve, n)
                                      : count_on_curve_lattice(cfg.curve, n, cfg.box_lo[0],
                                                               cfg.box_hi[0]);
    if (!cfg.box_lo.empty()) {
      std::vector<ExactPoint> kept;
      for (const auto& p : on) {
        if (in_box(p, cfg)) kept.push_back(p);
      }
      on = FiniteSet(std::move(kept));
    }
    s.count = on.size();
    if (keep_points) s.points = std::move(on);
    return s;
  }
  s.delta = scaled_delta(cfg.d, n, cfg.resolved_delta_exponent());
  TubeQuery q{cfg.curve, s.delta, lattice_for(cfg, n), keep_points, cfg.caps};
  CountResult r = count_in_tube(q);
  s.count = r.count;
  s.certified = r.certified;
  if (keep_points) s.points = FiniteSet(std::move(*r.points));
  return s;
}

// Distinct integer points of [-r, r]^2.
FiniteSet random_integer_set(std::mt19937_64& rng, std::size_t size, long r) {
  std::set<std::pair<long, long>> chosen;
  while (chosen.size() < size) {
    chosen.emplace(uniform_int(rng, -r, r), uniform_int(rng, -r, r));
  }
  std::vector<std::vector<long>> pts;
  for (const auto& [x, y] : chosen) pts.push_back({x, y});
  return FiniteSet::from_integers(pts);
}

FiniteSet random_subset(std::mt19937_64& rng, const FiniteSet& a) {
  std::vector<ExactPoint> kept;
  for (const auto& p : a) {
    if (rng() & 1U) kept.push_back(p);
  }
  if (kept.empty()) kept.push_back(a.points()[uniform_int(rng, 0, static_cast<long>(a.size()) - 1)]);
  return FiniteSet(std::move(kept));
}

MonomialSet bijection_monomials(int which) {
  if (which == 0) return MonomialSet({{1, 0}, {0, 1}, {1, 1}});
  return make_Ms(which + 1);
}

using io::Json;

// One trial; returns the failing instance as JSON, or nothing on success.
std::optional<Json> run_trial(CampaignKind kind, std::mt19937_64& rng, int trial,
                              const WorkCaps& caps) {
  switch (kind) {
    case CampaignKind::kEnergyBound: {
      const auto size = static_cast<std::size_t>(uniform_int(rng, 2, 30));
      FiniteSet a = random_integer_set(rng, size, 6);
      FiniteSet b = random_subset(rng, a);
      const int m = 2 + trial % 2;
      auto report = check_energy_lower_bound(a, b, m, caps);
      if (report.holds) return std::nullopt;
      return Json{{"A", io::to_json(a)}, {"B", io::to_json(b)}, {"report", io::to_json(report)}};
    }
    case CampaignKind::kPlunnecke: {
      const auto size = static_cast<std::size_t>(uniform_int(rng, 1, 20));
      FiniteSet a = random_integer_set(rng, size, 6);
      const int m = static_cast<int>(uniform_int(rng, 1, 4));
      auto report = check_plunnecke(a, m, caps);
      if (report.holds) return std::nullopt;
      return Json{{"A", io::to_json(a)}, {"report", io::to_json(report)}};
    }
    case CampaignKind::kLipschitz: {
      const MonomialSet ms = make_Ms(1 + trial % 3);
      ExactPoint p{{uniform_unit_rational(rng), uniform_unit_rational(rng)}};
      ExactPoint q{{uniform_unit_rational(rng), uniform_unit_rational(rng)}};
      const Rational lhs = squared_distance(lift_point(p, ms), lift_point(q, ms));
      const Rational rhs = lipschitz_constant_squared(ms, 1) * squared_distance(p, q);
      if (lhs <= rhs) return std::nullopt;
      return Json{{"monomials", io::to_json(ms)},
                  {"p", io::to_json(p)},
                  {"q", io::to_json(q)},
                  {"lifted_squared_distance", io::to_json(lhs)},
                  {"bound", io::to_json(rhs)}};
    }
    case CampaignKind::kBijection: {
      std::vector<Rational> coeffs(static_cast<std::size_t>(uniform_int(rng, 2, 4)));
      for (auto& c : coeffs) c = uniform_int(rng, -2, 2);
      const CurveSpec graph = make_polynomial_graph({Polynomial(coeffs)});
      const auto n = static_cast<std::uint64_t>(uniform_int(rng, 2, 40));
      const MonomialSet ms = bijection_monomials(static_cast<int>(uniform_int(rng, 0, 2)));
      auto report = check_lattice_bijection(graph, ms, n, count_on_curve_lattice(graph, n));
      if (report.bijection) return std::nullopt;
      return Json{{"curve", io::to_json(graph)},
                  {"N", n},
                  {"monomials", io::to_json(ms)},
                  {"report", io::to_json(report)}};
    }
    case CampaignKind::kGapDoubling: {
      Gap gap = random_proper_gap(rng, 3, 500);
      FiniteSet a = gap_enumerate(gap, caps);
      const Rational k = doubling(a, caps);
      const Rational bound = pow(Rational(2), static_cast<unsigned>(gap.gap_dimension()));
      if (k <= bound) return std::nullopt;
      return Json{{"gap", io::to_json(gap)}, {"doubling", io::ratio_json(k)},
                  {"bound", io::to_json(bound)}};
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<std::uint64_t> squares_up_to(std::uint64_t n_max) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 2; m * m <= n_max; ++m) out.push_back(m * m);
  return out;
}

void ExperimentConfig::validate() const {
  require(!schedule.empty(), ErrorCode::kInvalidArgument, "empty N schedule");
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    require(schedule[i] >= 1, ErrorCode::kInvalidArgument, "N must be >= 1");
    require(i == 0 || schedule[i] > schedule[i - 1], ErrorCode::kInvalidArgument,
            "N schedule must be strictly increasing");
  }
  require(on_curve || d > 0, ErrorCode::kInvalidArgument, "d must be positive");
  require(box_lo.size() == box_hi.size(), ErrorCode::kInvalidDimension, "box bounds differ in size");
  require(box_lo.empty() || box_lo.size() == static_cast<std::size_t>(curve.dimension()),
          ErrorCode::kInvalidDimension, "box dimension differs from the curve dimension");
  require(!energy_order || *energy_order >= 2, ErrorCode::kInvalidArgument,
          "energy order m must be >= 2");
  if (monomials) exponent(*monomials);
}

unsigned ExperimentConfig::resolved_delta_exponent() const {
  if (delta_exponent) return *delta_exponent;
  return monomials ? static_cast<unsigned>(monomials->size()) : 2U;
}

int ExperimentConfig::resolved_energy_order() const {
  if (energy_order) return *energy_order;
  const int n = curve.dimension();
  return n * (n + 1) / 2;
}

std::optional<SlopeFit> fit_power_law(const std::vector<std::pair<double, double>>& data,
                                      std::string* note) {
  std::vector<std::pair<double, double>> logs;
  for (const auto& [x, y] : data) {
    if (x > 0 && y > 0) logs.emplace_back(std::log(x), std::log(y));
  }
  auto reject = [&](const char* why) -> std::optional<SlopeFit> {
    if (note) *note = why;
    return std::nullopt;
  };
  if (logs.size() < 3) return reject("fewer than three rows with a positive count");
  bool flat = true;
  for (const auto& p : logs) flat = flat && p.second == logs.front().second;
  if (flat) return reject("all counts are equal; the slope carries no information");

  double mx = 0, my = 0;
  for (const auto& [lx, ly] : logs) {
    mx += lx;
    my += ly;
  }
  mx /= static_cast<double>(logs.size());
  my /= static_cast<double>(logs.size());
  double sxx = 0, sxy = 0;
  for (const auto& [lx, ly] : logs) {
    sxx += (lx - mx) * (lx - mx);
    sxy += (lx - mx) * (ly - my);
  }
  if (sxx == 0) return reject("all N are equal");
  SlopeFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  for (const auto& [lx, ly] : logs) {
    const double r = ly - (fit.intercept + fit.slope * lx);
    fit.residual += r * r;
  }
  fit.points = logs.size();
  if (note) note->clear();
  return fit;
}

CountReport run_exponent_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  CountReport report;
  report.curve_kind = to_string(cfg.curve.kind());
  report.monomials = cfg.monomials;
  report.on_curve = cfg.on_curve;
  if (cfg.monomials) report.theoretical_exponent = exponent(*cfg.monomials);

  std::vector<std::pair<double, double>> data;
  for (std::uint64_t n : cfg.schedule) {
    const auto start = Clock::now();
    Sample s = sample(cfg, n, false);
    report.rows.push_back(CountRow{n, s.delta, s.count, s.certified, elapsed_ms(start)});
    data.emplace_back(static_cast<double>(n), static_cast<double>(s.count));
  }
  report.fit = fit_power_law(data, &report.fit_note);
  if (report.fit && report.theoretical_exponent) {
    report.within_margin =
        report.fit->slope <= report.theoretical_exponent->get_d() + report.margin;
  }
  return report;
}

EnergyReport run_energy_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  EnergyReport report;
  report.curve_kind = to_string(cfg.curve.kind());
  report.m = cfg.resolved_energy_order();
  require(report.m >= 2, ErrorCode::kInvalidArgument, "energy order m must be >= 2");

  std::vector<std::pair<double, double>> data;
  for (std::uint64_t n : cfg.schedule) {
    const auto start = Clock::now();
    EnergyRow row;
    row.n = n;
    row.m = report.m;
    Sample s = sample(cfg, n, true);
    row.size_b = s.points->size();
    if (s.points->empty()) {
      row.skipped = true;
      row.note = "empty point set";
    } else {
      try {
        row.energy = additive_energy(*s.points, report.m, cfg.caps);
        row.ratio = Rational(*row.energy) /
                    pow(Rational(static_cast<unsigned long>(row.size_b)),
                        static_cast<unsigned>(report.m));
        data.emplace_back(static_cast<double>(n), row.ratio->get_d());
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kCapExceeded) throw;
        row.skipped = true;
        row.note = e.what();
      }
    }
    row.runtime_ms = elapsed_ms(start);
    report.rows.push_back(std::move(row));
  }
  report.trend = fit_power_law(data, &report.trend_note);
  return report;
}

std::string to_string(CampaignKind kind) {
  switch (kind) {
    case CampaignKind::kEnergyBound: return "energy-bound";
    case CampaignKind::kPlunnecke: return "plunnecke";
    case CampaignKind::kLipschitz: return "lipschitz";
    case CampaignKind::kBijection: return "bijection";
    case CampaignKind::kGapDoubling: return "gap-doubling";
  }
  return "unknown";
}

CampaignKind parse_campaign_kind(const std::string& name) {
  if (name == "plünnecke") return CampaignKind::kPlunnecke;
  if (name == "lemma-2.4") return CampaignKind::kEnergyBound;
  for (auto kind : {CampaignKind::kEnergyBound, CampaignKind::kPlunnecke, CampaignKind::kLipschitz,
                    CampaignKind::kBijection, CampaignKind::kGapDoubling}) {
    if (to_string(kind) == name) return kind;
  }
  fail(ErrorCode::kParse, "unknown campaign kind '" + name + "'");
}

CampaignReport run_inequality_campaign(CampaignKind kind, std::uint64_t seed, int trials,
                                       const WorkCaps& caps) {
  require(trials >= 1, ErrorCode::kInvalidArgument, "trials must be >= 1");
  CampaignReport report;
  report.kind = kind;
  report.seed = seed;
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    ++report.trials;
    if (auto bad = run_trial(kind, rng, trial, caps)) {
      ++report.failures;
      (*bad)["trial"] = trial;
      report.counterexample = bad->dump();
      break;
    }
    ++report.passes;
  }
  return report;
}

Gap random_proper_gap(std::mt19937_64& rng, int max_dim, std::uint64_t max_size) {
  require(max_dim >= 1 && max_size >= 1, ErrorCode::kInvalidArgument,
          "GAP dimension and size bounds must be positive");
  for (;;) {
    const int dim = static_cast<int>(uniform_int(rng, 1, max_dim));
    Gap gap;
    gap.base = ExactPoint{{ratio(static_cast<long>(uniform_int(rng, -5, 5)),
                                 static_cast<unsigned long>(uniform_int(rng, 1, 4))),
                           ratio(static_cast<long>(uniform_int(rng, -5, 5)),
                                 static_cast<unsigned long>(uniform_int(rng, 1, 4)))}};
    std::uint64_t budget = max_size;
    for (int i = 0; i < dim; ++i) {
      const auto share = static_cast<std::uint64_t>(
          std::floor(std::pow(static_cast<double>(budget), 1.0 / (dim - i))));
      const auto len = static_cast<std::uint64_t>(
          uniform_int(rng, 1, static_cast<std::int64_t>(std::max<std::uint64_t>(share, 1))));
      gap.lengths.push_back(len);
      budget /= len;
      long gx = 0, gy = 0;
      while (gx == 0 && gy == 0) {
        gx = uniform_int(rng, -7, 7);
        gy = uniform_int(rng, -7, 7);
      }
      gap.generators.push_back(ExactPoint{{Rational(gx), Rational(gy)}});
    }
    if (is_proper(gap)) return gap;
  }
}

}  // namespace curvelift
