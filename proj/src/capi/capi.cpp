#include "curvelift/curvelift.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "curvelift/error.hpp"
#include "curvelift/experiments.hpp"
#include "curvelift/hyperplane.hpp"
#include "curvelift/io.hpp"
#include "curvelift/lifting.hpp"

struct clift_curve {
  curvelift::CurveSpec spec;
};

struct clift_monomials {
  curvelift::MonomialSet set;
};

namespace {

using namespace curvelift;
using io::Json;

thread_local std::string g_last_error;

clift_status record(clift_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

// Runs fn, mapping exceptions onto status codes.
template <typename Fn>
clift_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    fn();
    return CLIFT_OK;
  } catch (const Error& e) {
    return record(static_cast<clift_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return record(CLIFT_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return record(CLIFT_INTERNAL, e.what());
  }
}

void need(const void* p, const char* name) {
  require(p != nullptr, ErrorCode::kInvalidArgument, std::string(name) + " is null");
}

char* duplicate(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

std::filesystem::path base_of(const char* base_dir) {
  return base_dir ? std::filesystem::path(base_dir) : std::filesystem::path();
}

WorkCaps caps_from(std::uint64_t cap) {
  WorkCaps caps;
  if (cap != 0) {
    caps.enumeration = cap;
    caps.energy = cap;
  }
  return caps;
}

}  // namespace

extern "C" {

const char* clift_version(void) { return "0.1.0"; }

const char* clift_last_error(void) { return g_last_error.c_str(); }

const char* clift_status_name(clift_status status) {
  switch (status) {
    case CLIFT_OK: return "ok";
    case CLIFT_INVALID_ARGUMENT: return "invalid-argument";
    case CLIFT_DOMAIN: return "domain";
    case CLIFT_UNSUPPORTED_ORDER: return "unsupported-order";
    case CLIFT_INVALID_DIMENSION: return "invalid-dimension";
    case CLIFT_CAP_EXCEEDED: return "cap-exceeded";
    case CLIFT_PARSE: return "parse";
    case CLIFT_SUBSET_VIOLATION: return "subset-violation";
    case CLIFT_UNDEFINED: return "undefined";
    case CLIFT_INVALID_FORM: return "invalid-form";
    case CLIFT_IO: return "io";
    case CLIFT_INTERNAL: return "internal";
  }
  return "unknown";
}

void clift_string_free(char* text) { std::free(text); }

clift_status clift_curve_from_json(const char* json, const char* base_dir, clift_curve** out) {
  return guarded([&] {
    need(json, "json");
    need(out, "out");
    *out = new clift_curve{io::curve_from_json(io::parse_json(json), base_of(base_dir))};
  });
}

clift_status clift_curve_load(const char* path, clift_curve** out) {
  return guarded([&] {
    need(path, "path");
    need(out, "out");
    *out = new clift_curve{io::curve_from_json(Json(path))};
  });
}

clift_status clift_curve_moment(int n, clift_curve** out) {
  return guarded([&] {
    need(out, "out");
    *out = new clift_curve{make_moment_curve(n)};
  });
}

void clift_curve_free(clift_curve* curve) { delete curve; }

clift_status clift_curve_dimension(const clift_curve* curve, int* out) {
  return guarded([&] {
    need(curve, "curve");
    need(out, "out");
    *out = curve->spec.dimension();
  });
}

clift_status clift_curve_to_json(const clift_curve* curve, char** out) {
  return guarded([&] {
    need(curve, "curve");
    need(out, "out");
    *out = duplicate(io::to_json(curve->spec).dump());
  });
}

clift_status clift_monomials_from_json(const char* json, clift_monomials** out) {
  return guarded([&] {
    need(json, "json");
    need(out, "out");
    // Bare shorthand such as M3 is accepted without quotes.
    const std::string text(json);
    const Json j = !text.empty() && text[0] == 'M' ? Json(text) : io::parse_json(text);
    *out = new clift_monomials{io::monomials_from_json(j)};
  });
}

void clift_monomials_free(clift_monomials* monomials) { delete monomials; }

clift_status clift_wronskian(const clift_curve* curve, const char* t, char** out) {
  return guarded([&] {
    need(curve, "curve");
    need(t, "t");
    need(out, "out");
    const Rational param = parse_rational(t);
    Json j = io::to_json(wronskian(curve->spec, param));
    j["t"] = to_string(param);
    *out = duplicate(j.dump());
  });
}

clift_status clift_certify(const clift_curve* curve, double c0, int grid, char** out) {
  return guarded([&] {
    need(curve, "curve");
    need(out, "out");
    *out = duplicate(io::to_json(certify_nondegenerate(curve->spec, c0, grid)).dump());
  });
}

clift_status clift_lift(const clift_curve* curve, const clift_monomials* monomials,
                        clift_curve** out) {
  return guarded([&] {
    need(curve, "curve");
    need(monomials, "monomials");
    need(out, "out");
    *out = new clift_curve{lift_curve(curve->spec, monomials->set)};
  });
}

clift_status clift_exponent(const clift_monomials* monomials, char** out) {
  return guarded([&] {
    need(monomials, "monomials");
    need(out, "out");
    const auto& m = monomials->set;
    Json j{{"monomials", io::to_json(m)},
           {"n", m.size()},
           {"degrees", m.degrees()},
           {"exponent", io::ratio_json(exponent(m))},
           {"lipschitz_squared_at_1", io::to_json(lipschitz_constant_squared(m, 1))}};
    *out = duplicate(j.dump());
  });
}

clift_status clift_lipschitz(const clift_monomials* monomials, double radius, double* out) {
  return guarded([&] {
    need(monomials, "monomials");
    need(out, "out");
    *out = lipschitz_constant(monomials->set, radius);
  });
}

clift_status clift_bijection(const clift_curve* curve, const clift_monomials* monomials,
                             uint64_t n, char** out) {
  return guarded([&] {
    need(curve, "curve");
    need(monomials, "monomials");
    need(out, "out");
    const FiniteSet on = count_on_curve_lattice(curve->spec, n);
    Json j = io::to_json(check_lattice_bijection(curve->spec, monomials->set, n, on));
    j["N"] = n;
    *out = duplicate(j.dump());
  });
}

clift_status clift_count(const char* query_json, const char* base_dir, char** out) {
  return guarded([&] {
    need(query_json, "query_json");
    need(out, "out");
    const TubeQuery q = io::tube_query_from_json(io::parse_json(query_json), base_of(base_dir));
    Json j = io::to_json(count_in_tube(q));
    j["delta"] = to_string(q.delta);
    *out = duplicate(j.dump());
  });
}

clift_status clift_energy(const char* doc_json, uint64_t cap, char** out) {
  return guarded([&] {
    need(doc_json, "doc_json");
    need(out, "out");
    const Json doc = io::parse_json(doc_json);
    const WorkCaps caps = caps_from(cap);
    FiniteSet set;
    if (doc.contains("gap")) {
      set = gap_enumerate(io::gap_from_json(doc.at("gap")), caps);
    } else {
      require(doc.contains("points"), ErrorCode::kParse, "energy needs \"points\" or \"gap\"");
      set = io::set_from_json(doc.at("points"));
    }
    require(doc.contains("m") && doc.at("m").is_number_integer(), ErrorCode::kParse,
            "energy needs an integer \"m\"");
    const int m = doc.at("m").get<int>();
    require(!set.empty(), ErrorCode::kInvalidArgument, "empty point set");
    const Integer e = additive_energy(set, m, caps);
    const Rational ratio = Rational(e) / pow(Rational(static_cast<unsigned long>(set.size())),
                                             static_cast<unsigned>(m));
    Json j{{"size", set.size()},
           {"m", m},
           {"energy", e.fits_slong_p() ? Json(e.get_si()) : Json(e.get_str())},
           {"ratio", io::ratio_json(ratio)},
           {"doubling", io::ratio_json(doubling(set, caps))}};
    if (doc.contains("subset")) {
      j["energy_bound"] = io::to_json(
          check_energy_lower_bound(set, io::set_from_json(doc.at("subset")), m, caps));
    }
    *out = duplicate(j.dump());
  });
}

clift_status clift_intersect(const clift_curve* curve, const char* hyperplane_json, char** out) {
  return guarded([&] {
    need(curve, "curve");
    need(hyperplane_json, "hyperplane_json");
    need(out, "out");
    const Hyperplane h = io::hyperplane_from_json(io::parse_json(hyperplane_json));
    Json j = io::to_json(intersect(curve->spec, h));
    j["hyperplane"] = io::to_json(h);
    *out = duplicate(j.dump());
  });
}

clift_status clift_hyperplanes(const clift_curve* curve, int trials, uint64_t seed, char** out) {
  return guarded([&] {
    need(curve, "curve");
    need(out, "out");
    require(trials >= 1, ErrorCode::kInvalidArgument, "trials must be >= 1");
    const CurveSpec& c = curve->spec;
    Json j = io::to_json(max_intersections(c, trials, seed));
    if (c.is_exact() && c.is_graph_form() && c.dimension() >= 2) {
      std::mt19937_64 rng(seed);
      int checked = 0, held = 0;
      for (int i = 0; i < trials; ++i) {
        MvtReport r = check_mean_value(c, random_hyperplane(static_cast<std::size_t>(c.dimension()), rng));
        if (r.roots < 2) continue;
        ++checked;
        if (r.holds) ++held;
      }
      j["mean_value"] = Json{{"checked", checked}, {"held", held}};
    }
    *out = duplicate(j.dump());
  });
}

clift_status clift_experiment(const char* config_json, const char* base_dir, const char* mode,
                              clift_format format, int with_runtime, uint64_t cap, char** out) {
  return guarded([&] {
    need(config_json, "config_json");
    need(mode, "mode");
    need(out, "out");
    ExperimentConfig cfg =
        io::experiment_config_from_json(io::parse_json(config_json), base_of(base_dir));
    if (cap != 0) cfg.caps = caps_from(cap);
    const bool runtime = with_runtime != 0 || cfg.record_runtime;
    const std::string m(mode);
    if (m == "exponent") {
      CountReport r = run_exponent_experiment(cfg);
      *out = duplicate(format == CLIFT_FORMAT_CSV ? io::to_csv(r)
                                                  : io::to_json(r, runtime).dump(2) + "\n");
    } else if (m == "energy") {
      EnergyReport r = run_energy_experiment(cfg);
      *out = duplicate(format == CLIFT_FORMAT_CSV ? io::to_csv(r)
                                                  : io::to_json(r, runtime).dump(2) + "\n");
    } else {
      fail(ErrorCode::kInvalidArgument, "unknown experiment mode '" + m + "'");
    }
  });
}

clift_status clift_campaign(const char* kind, uint64_t seed, int trials, uint64_t cap, char** out,
                            int* failures) {
  return guarded([&] {
    need(kind, "kind");
    need(out, "out");
    CampaignReport r = run_inequality_campaign(parse_campaign_kind(kind), seed, trials,
                                               caps_from(cap));
    if (failures) *failures = r.failures;
    *out = duplicate(io::to_json(r).dump());
  });
}

}  // extern "C"
