#include "curvelift/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "curvelift/error.hpp"

namespace curvelift::io {

namespace {

namespace fs = std::filesystem;

const Json& field(const Json& j, const char* key) {
  require(j.is_object() && j.contains(key), ErrorCode::kParse,
          std::string("missing field '") + key + "'");
  return j.at(key);
}

template <typename T>
T get_as(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    fail(ErrorCode::kParse, std::string("bad value for ") + what + ": " + j.dump());
  }
}

std::vector<Rational> rationals_from_json(const Json& j) {
  require(j.is_array(), ErrorCode::kParse, "expected an array of rationals");
  std::vector<Rational> out;
  for (const auto& v : j) out.push_back(rational_from_json(v));
  return out;
}

Json rationals_to_json(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_json(v));
  return out;
}

std::vector<Polynomial> polynomials_from_json(const Json& j) {
  require(j.is_array(), ErrorCode::kParse, "expected an array of coefficient arrays");
  std::vector<Polynomial> out;
  for (const auto& c : j) out.emplace_back(rationals_from_json(c));
  return out;
}

Json polynomials_to_json(const std::vector<Polynomial>& polys) {
  Json out = Json::array();
  for (const auto& p : polys) out.push_back(rationals_to_json(p.coefficients()));
  return out;
}

// Objects pass through; strings name JSON files relative to base_dir.
Json resolve(const Json& j, const fs::path& base_dir, fs::path* next_base) {
  if (!j.is_string()) {
    *next_base = base_dir;
    return j;
  }
  fs::path path(j.get<std::string>());
  if (path.is_relative() && !base_dir.empty()) path = base_dir / path;
  *next_base = path.parent_path();
  return read_json_file(path);
}

Json integer_json(const Integer& value) {
  if (value.fits_slong_p()) return value.get_si();
  return value.get_str();
}

Json fit_json(const std::optional<SlopeFit>& fit) {
  if (!fit) return nullptr;
  return Json{{"slope", fit->slope},
              {"intercept", fit->intercept},
              {"residual", fit->residual},
              {"points", fit->points}};
}

std::string csv_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

Json read_json_file(const fs::path& path) {
  std::ifstream in(path);
  require(in.good(), ErrorCode::kIo, "cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::kParse, std::string("invalid JSON: ") + e.what());
  }
}

Json to_json(const Rational& value) { return to_string(value); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(Integer(j.dump()));
  require(j.is_string(), ErrorCode::kParse, "rationals are \"p/q\" strings, got " + j.dump());
  return parse_rational(j.get<std::string>());
}

Json ratio_json(const Rational& value) {
  return Json{{"exact", to_string(value)}, {"approx", value.get_d()}};
}

Json to_json(const ExactPoint& p) { return rationals_to_json(p.coords); }

ExactPoint point_from_json(const Json& j) { return ExactPoint{rationals_from_json(j)}; }

Json to_json(const FiniteSet& set) {
  Json out = Json::array();
  for (const auto& p : set) out.push_back(to_json(p));
  return out;
}

FiniteSet set_from_json(const Json& j) {
  require(j.is_array(), ErrorCode::kParse, "point sets are arrays of points");
  std::vector<ExactPoint> pts;
  for (const auto& p : j) {
    pts.push_back(point_from_json(p));
    require(pts.back().dimension() == pts.front().dimension(), ErrorCode::kInvalidDimension,
            "points of a set must share one dimension");
  }
  return FiniteSet(std::move(pts));
}

Json to_json(const Gap& gap) {
  Json gens = Json::array();
  for (const auto& g : gap.generators) gens.push_back(to_json(g));
  return Json{{"base", to_json(gap.base)}, {"generators", gens}, {"lengths", gap.lengths}};
}

Gap gap_from_json(const Json& j) {
  Gap gap;
  gap.base = point_from_json(field(j, "base"));
  for (const auto& g : field(j, "generators")) gap.generators.push_back(point_from_json(g));
  gap.lengths = get_as<std::vector<std::uint64_t>>(field(j, "lengths"), "lengths");
  gap.validate();
  return gap;
}

Json to_json(const MonomialSet& monomials) {
  Json out = Json::array();
  for (const auto& m : monomials.monomials()) out.push_back(Json::array({m.a, m.b}));
  return out;
}

MonomialSet monomials_from_json(const Json& j) {
  // "M3" is shorthand for all monomials of degree 1..3.
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    require(s.size() >= 2 && s[0] == 'M', ErrorCode::kParse, "unknown monomial set '" + s + "'");
    try {
      return make_Ms(std::stoi(s.substr(1)));
    } catch (const std::logic_error&) {
      fail(ErrorCode::kParse, "unknown monomial set '" + s + "'");
    }
  }
  require(j.is_array(), ErrorCode::kParse, "monomial sets are arrays of [a, b] pairs");
  std::vector<Monomial> out;
  for (const auto& m : j) {
    auto ab = get_as<std::vector<unsigned>>(m, "monomial");
    require(ab.size() == 2, ErrorCode::kParse, "monomials are [a, b] pairs");
    out.push_back(Monomial{ab[0], ab[1]});
  }
  return MonomialSet(std::move(out));
}

Json to_json(const Hyperplane& plane) {
  Json out = Json::array({to_json(plane.offset())});
  for (const auto& a : plane.normal()) out.push_back(to_json(a));
  return out;
}

Hyperplane hyperplane_from_json(const Json& j) {
  auto values = rationals_from_json(j);
  require(values.size() >= 2, ErrorCode::kParse, "hyperplanes are [a0, a1, ..., an]");
  Rational a0 = values.front();
  values.erase(values.begin());
  return Hyperplane(std::move(a0), std::move(values));
}

Json to_json(const CurveSpec& curve) {
  Json out{{"kind", to_string(curve.kind())}, {"dimension", curve.dimension()}};
  if (curve.is_polynomial()) {
    out["coefficients"] = polynomials_to_json(curve.coordinates());
  } else if (curve.is_rational()) {
    out["numerators"] = polynomials_to_json(curve.coordinates());
    out["denominators"] = polynomials_to_json(curve.denominators());
  } else if (curve.kind() == CurveKind::kLifted) {
    out["base"] = to_json(*curve.base());
    out["monomials"] = to_json(curve.monomials());
  }
  out["domain"] = Json::array({to_json(curve.t_lo()), to_json(curve.t_hi())});
  out["smoothness_order"] = curve.smoothness_order();
  return out;
}

CurveSpec curve_from_json(const Json& source, const fs::path& base_dir) {
  fs::path here;
  const Json j = resolve(source, base_dir, &here);
  const CurveKind kind = parse_curve_kind(get_as<std::string>(field(j, "kind"), "kind"));
  Rational lo = 0, hi = 1;
  if (j.contains("domain")) {
    auto d = rationals_from_json(j.at("domain"));
    require(d.size() == 2, ErrorCode::kParse, "domain is [t_lo, t_hi]");
    lo = d[0];
    hi = d[1];
  }
  const int smooth = j.contains("smoothness_order")
                         ? get_as<int>(j.at("smoothness_order"), "smoothness_order")
                         : kDefaultSmoothnessOrder;
  auto check_dimension = [&](const CurveSpec& c) {
    if (j.contains("dimension")) {
      require(get_as<int>(j.at("dimension"), "dimension") == c.dimension(),
              ErrorCode::kInvalidDimension, "declared dimension differs from the coefficients");
    }
    return c;
  };

  if (kind == CurveKind::kCircleArc) return check_dimension(CurveSpec::circle_arc(lo, hi, smooth));
  if (j.contains("base")) {
    require(kind == CurveKind::kLifted, ErrorCode::kParse, "only lifted curves have a base");
    const CurveSpec base = curve_from_json(j.at("base"), here);
    return check_dimension(lift_curve(base, monomials_from_json(field(j, "monomials"))));
  }
  if (j.contains("numerators")) {
    return check_dimension(CurveSpec::rational(polynomials_from_json(j.at("numerators")),
                                               polynomials_from_json(field(j, "denominators")),
                                               lo, hi, smooth, kind));
  }
  if (kind == CurveKind::kMoment && !j.contains("coefficients")) {
    const int n = get_as<int>(field(j, "dimension"), "dimension");
    const CurveSpec m = make_moment_curve(n);
    return CurveSpec::polynomial(CurveKind::kMoment, m.coordinates(), lo, hi, smooth);
  }
  return check_dimension(
      CurveSpec::polynomial(kind, polynomials_from_json(field(j, "coefficients")), lo, hi, smooth));
}

TubeQuery tube_query_from_json(const Json& j, const fs::path& base_dir) {
  CurveSpec curve = curve_from_json(field(j, "curve"), base_dir);
  const Json& d = field(j, "delta");
  Rational delta;
  std::optional<std::uint64_t> delta_n;
  if (d.is_object()) {
    delta_n = get_as<std::uint64_t>(field(d, "N"), "delta.N");
    delta = scaled_delta(d.contains("d") ? rational_from_json(d.at("d")) : Rational(1), *delta_n,
                         get_as<unsigned>(field(d, "n"), "delta.n"));
  } else {
    delta = rational_from_json(d);
  }

  const Json& s = field(j, "source");
  const auto type = get_as<std::string>(field(s, "type"), "source.type");
  TubeSource source;
  if (type == "lattice") {
    LatticeSource lat;
    if (s.contains("N")) {
      lat.n = get_as<std::uint64_t>(s.at("N"), "source.N");
    } else {
      require(delta_n.has_value(), ErrorCode::kParse, "lattice source needs N");
      lat.n = *delta_n;
    }
    const auto dim = static_cast<std::size_t>(curve.dimension());
    lat.lo = s.contains("lo") ? rationals_from_json(s.at("lo")) : std::vector<Rational>(dim, 0);
    lat.hi = s.contains("hi") ? rationals_from_json(s.at("hi")) : std::vector<Rational>(dim, 1);
    source = std::move(lat);
  } else if (type == "points") {
    source = set_from_json(field(s, "points"));
  } else if (type == "gap") {
    source = gap_from_json(s);
  } else {
    fail(ErrorCode::kParse, "unknown source type '" + type + "'");
  }
  TubeQuery q{std::move(curve), std::move(delta), std::move(source), false, {}};
  if (j.contains("retain_points")) q.retain_points = get_as<bool>(j.at("retain_points"), "retain_points");
  return q;
}

Json to_json(const CountResult& r) {
  Json out{{"count", r.count},
           {"certified", r.certified},
           {"arcs_examined", r.arcs_examined},
           {"ambiguous", r.ambiguous},
           {"resolved_exactly", r.resolved_exactly}};
  if (r.points) out["points"] = to_json(FiniteSet(*r.points));
  return out;
}

Json to_json(const WronskianValue& v) {
  Json out{{"value", v.value}, {"error_estimate", v.error_estimate}};
  out["exact"] = v.exact ? Json(to_string(*v.exact)) : Json(nullptr);
  return out;
}

Json to_json(const NondegeneracyCertificate& c) {
  return Json{{"status", to_string(c.status)},
              {"c0", c.c0},
              {"grid_resolution", c.grid_resolution},
              {"min_sampled_wronskian", c.min_sampled_wronskian},
              {"argmin_t", c.argmin_t},
              {"margin_estimate", c.margin_estimate},
              {"margin_exact", c.margin_exact}};
}

Json to_json(const BijectionReport& r) {
  Json out{{"n", r.n},
           {"degrees", r.degrees},
           {"exponent", to_string(r.exponent)},
           {"cardinality_base", r.cardinality_base},
           {"cardinality_lifted", r.cardinality_lifted},
           {"denominators_ok", r.denominators_ok},
           {"injective", r.injective},
           {"bijection", r.bijection}};
  if (r.counterexample) out["counterexample"] = *r.counterexample;
  return out;
}

Json to_json(const IntersectionResult& r) {
  Json roots = Json::array();
  for (const auto& root : r.roots) {
    Json item{{"t", root.t}, {"tangential", root.tangential}};
    if (root.lo) item["interval"] = Json::array({to_json(*root.lo), to_json(*root.hi)});
    roots.push_back(std::move(item));
  }
  return Json{{"count", r.roots.size()},
              {"roots", roots},
              {"exact", r.exact},
              {"contained", r.contained},
              {"certified", r.certified}};
}

Json to_json(const IntersectionEstimate& e) {
  Json out{{"max_count", e.max_count},
           {"estimate", "empirical lower estimate of the uniform intersection bound"},
           {"trials", e.trials},
           {"seed", e.seed},
           {"all_certified", e.all_certified}};
  out["witness"] = e.witness ? to_json(*e.witness) : Json(nullptr);
  return out;
}

Json to_json(const MvtReport& r) {
  return Json{{"roots", r.roots}, {"derivative_roots", r.derivative_roots}, {"holds", r.holds}};
}

Json to_json(const EnergyBoundReport& r) {
  return Json{{"m", r.m},
              {"size_a", r.size_a},
              {"size_b", r.size_b},
              {"energy", integer_json(r.energy)},
              {"doubling", ratio_json(r.doubling)},
              {"ratio", ratio_json(r.ratio)},
              {"holds", r.holds}};
}

Json to_json(const PlunneckeReport& r) {
  return Json{{"m", r.m},
              {"size_a", r.size_a},
              {"size_ma", r.size_ma},
              {"doubling", ratio_json(r.doubling)},
              {"ratio", ratio_json(r.ratio)},
              {"holds", r.holds}};
}

ExperimentConfig experiment_config_from_json(const Json& j, const fs::path& base_dir) {
  ExperimentConfig cfg;
  cfg.curve = curve_from_json(field(j, "curve"), base_dir);
  if (j.contains("monomials")) cfg.monomials = monomials_from_json(j.at("monomials"));
  const Json& sched = field(j, "schedule");
  if (sched.is_object()) {
    cfg.schedule = squares_up_to(get_as<std::uint64_t>(field(sched, "squares_up_to"),
                                                       "schedule.squares_up_to"));
  } else {
    cfg.schedule = get_as<std::vector<std::uint64_t>>(sched, "schedule");
  }
  if (j.contains("delta")) {
    const Json& d = j.at("delta");
    if (d.is_string() && d.get<std::string>() == "zero") {
      cfg.on_curve = true;
    } else {
      if (d.contains("d")) cfg.d = rational_from_json(d.at("d"));
      if (d.contains("n")) cfg.delta_exponent = get_as<unsigned>(d.at("n"), "delta.n");
    }
  }
  if (j.contains("box")) {
    cfg.box_lo = rationals_from_json(field(j.at("box"), "lo"));
    cfg.box_hi = rationals_from_json(field(j.at("box"), "hi"));
  }
  if (j.contains("m")) cfg.energy_order = get_as<int>(j.at("m"), "m");
  if (j.contains("seed")) cfg.seed = get_as<std::uint64_t>(j.at("seed"), "seed");
  if (j.contains("caps")) {
    const Json& c = j.at("caps");
    if (c.contains("enumeration")) cfg.caps.enumeration = get_as<std::uint64_t>(c.at("enumeration"), "caps.enumeration");
    if (c.contains("energy")) cfg.caps.energy = get_as<std::uint64_t>(c.at("energy"), "caps.energy");
  }
  if (j.contains("record_runtime")) cfg.record_runtime = get_as<bool>(j.at("record_runtime"), "record_runtime");
  cfg.validate();
  return cfg;
}

Json to_json(const CountReport& r, bool with_runtime) {
  Json out{{"curve_kind", r.curve_kind}, {"on_curve", r.on_curve}};
  if (r.monomials) out["monomials"] = to_json(*r.monomials);
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json item{{"N", row.n}, {"delta", to_string(row.delta)}, {"count", row.count},
              {"certified", row.certified}};
    if (with_runtime) item["runtime_ms"] = row.runtime_ms;
    rows.push_back(std::move(item));
  }
  out["rows"] = rows;
  out["fit"] = fit_json(r.fit);
  if (!r.fit) out["fit_note"] = r.fit_note;
  if (r.theoretical_exponent) out["theoretical_exponent"] = ratio_json(*r.theoretical_exponent);
  if (r.within_margin) {
    out["verdict"] = Json{
        {"margin", r.margin},
        {"within_margin", *r.within_margin},
        {"statement", *r.within_margin
                          ? "fitted slope <= e(M) + margin"
                          : "fitted slope exceeds e(M) + margin at these N; not a refutation, "
                            "since constants and small-N effects are uncontrolled"}};
  }
  return out;
}

Json to_json(const EnergyReport& r, bool with_runtime) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json item{{"N", row.n}, {"size_b", row.size_b}, {"m", row.m}, {"skipped", row.skipped}};
    if (row.energy) item["energy"] = integer_json(*row.energy);
    if (row.ratio) item["ratio"] = ratio_json(*row.ratio);
    if (!row.note.empty()) item["note"] = row.note;
    if (with_runtime) item["runtime_ms"] = row.runtime_ms;
    rows.push_back(std::move(item));
  }
  Json out{{"curve_kind", r.curve_kind}, {"m", r.m}, {"rows", rows}, {"trend", fit_json(r.trend)}};
  if (!r.trend) out["trend_note"] = r.trend_note;
  return out;
}

Json to_json(const CampaignReport& r) {
  Json out{{"kind", to_string(r.kind)},
           {"seed", r.seed},
           {"trials", r.trials},
           {"passes", r.passes},
           {"failures", r.failures}};
  out["counterexample"] = r.counterexample ? parse_json(*r.counterexample) : Json(nullptr);
  return out;
}

std::string to_csv(const CountReport& r) {
  std::string out = "N,delta,count,certified,runtime_ms\n";
  for (const auto& row : r.rows) {
    out += std::to_string(row.n) + "," + to_string(row.delta) + "," + std::to_string(row.count) +
           "," + (row.certified ? "true" : "false") + "," + csv_double(row.runtime_ms) + "\n";
  }
  return out;
}

std::string to_csv(const EnergyReport& r) {
  std::string out = "N,size_b,m,energy,ratio,skipped,runtime_ms\n";
  for (const auto& row : r.rows) {
    out += std::to_string(row.n) + "," + std::to_string(row.size_b) + "," +
           std::to_string(row.m) + "," + (row.energy ? row.energy->get_str() : "") + "," +
           (row.ratio ? to_string(*row.ratio) : "") + "," + (row.skipped ? "true" : "false") +
           "," + csv_double(row.runtime_ms) + "\n";
  }
  return out;
}

}  // namespace curvelift::io
