// Command-line front end; talks to the library only through curvelift.h.
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "curvelift/curvelift.h"

namespace {

namespace fs = std::filesystem;

constexpr int kExitUsage = 1;
constexpr int kExitCampaignFailure = 2;

struct Failure {
  std::string message;
};

void check(clift_status status) {
  if (status != CLIFT_OK) {
    throw Failure{std::string(clift_status_name(status)) + ": " + clift_last_error()};
  }
}

std::string take(char* text) {
  std::string out(text);
  clift_string_free(text);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure{"cannot open " + path};
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct CurveDeleter {
  void operator()(clift_curve* c) const { clift_curve_free(c); }
};
struct MonomialsDeleter {
  void operator()(clift_monomials* m) const { clift_monomials_free(m); }
};
using CurvePtr = std::unique_ptr<clift_curve, CurveDeleter>;
using MonomialsPtr = std::unique_ptr<clift_monomials, MonomialsDeleter>;

// Inline JSON when the argument starts with '{', otherwise a file path.
CurvePtr load_curve(const std::string& arg) {
  clift_curve* c = nullptr;
  if (!arg.empty() && arg.front() == '{') {
    check(clift_curve_from_json(arg.c_str(), nullptr, &c));
  } else {
    check(clift_curve_load(arg.c_str(), &c));
  }
  return CurvePtr(c);
}

MonomialsPtr load_monomials(const std::string& arg) {
  clift_monomials* m = nullptr;
  check(clift_monomials_from_json(arg.c_str(), &m));
  return MonomialsPtr(m);
}

std::string parent_dir(const std::string& path) { return fs::path(path).parent_path().string(); }

struct Globals {
  std::string config;
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "json";
  std::uint64_t cap = 0;
  bool timing = false;
};

void emit(const Globals& g, std::string text) {
  if (text.empty() || text.back() != '\n') text += '\n';
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(g.out);
  if (!out) throw Failure{"cannot write " + g.out};
  out << text;
}

void require_config(const Globals& g, const char* command) {
  if (g.config.empty()) throw Failure{std::string(command) + " needs --config"};
}

void json_only(const Globals& g, const char* command) {
  if (g.format != "json") throw Failure{std::string(command) + " only emits JSON"};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattice points near curves, monomial lifts and additive energy"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", clift_version());

  Globals g;
  app.add_option("--config", g.config, "JSON document for the subcommand");
  app.add_option("--seed", g.seed, "Random seed");
  app.add_option("--out", g.out, "Write output to this path instead of stdout");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--cap", g.cap, "Work cap for enumeration and energy (0 keeps defaults)");
  app.add_flag("--timing", g.timing, "Include per-row runtimes in JSON reports");

  std::string curve_arg, monomials_arg = "M1", hyperplane_arg, mode = "exponent", kind;
  std::vector<std::string> params{"0"};
  double c0 = 0.0;
  int grid = 1024, trials = 100, hyper_trials = 1000;
  std::uint64_t lattice_n = 0;
  bool sweep = false;

  auto* wr = app.add_subcommand("wronskian", "Wronskian of a curve at rational parameters");
  wr->add_option("--curve", curve_arg, "Curve file or inline JSON")->required();
  wr->add_option("--t", params, "Parameter values (p/q)");

  auto* cert = app.add_subcommand("certify", "Certify |W| > c0 on the domain");
  cert->add_option("--curve", curve_arg, "Curve file or inline JSON")->required();
  cert->add_option("--c0", c0, "Lower bound for |W|");
  cert->add_option("--grid", grid, "Sample grid resolution");

  auto* lift = app.add_subcommand("lift", "Lift a planar curve through a monomial set");
  lift->add_option("--curve", curve_arg, "Curve file or inline JSON")->required();
  lift->add_option("--monomials", monomials_arg, "[[a, b], ...] or M<s>")->required();
  lift->add_option("--N", lattice_n, "Also check the lattice bijection at this N");

  auto* expo = app.add_subcommand("exponent", "Exponent e(M) of a monomial set");
  expo->add_option("--monomials", monomials_arg, "[[a, b], ...] or M<s>")->required();

  app.add_subcommand("count", "Count lattice points in a tube (--config query.json)");

  auto* energy = app.add_subcommand("energy", "Additive energy of a set, or an energy sweep");
  energy->add_flag("--sweep", sweep, "Treat --config as an experiment config");

  auto* hyp = app.add_subcommand("hyperplanes", "Curve-hyperplane intersections");
  hyp->add_option("--curve", curve_arg, "Curve file or inline JSON")->required();
  hyp->add_option("--trials", hyper_trials, "Random hyperplanes to draw");
  hyp->add_option("--hyperplane", hyperplane_arg, "Intersect one hyperplane [a0, a1, ...]");

  auto* exp = app.add_subcommand("experiment", "Run an exponent or energy experiment");
  exp->add_option("--mode", mode, "Experiment kind")->check(CLI::IsMember({"exponent", "energy"}));

  auto* chk = app.add_subcommand("check", "Randomized inequality campaign");
  chk->add_option("kind", kind, "energy-bound, plunnecke, lipschitz, bijection or gap-doubling")
      ->required();
  chk->add_option("--trials", trials, "Number of random instances");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    const clift_format format = g.format == "csv" ? CLIFT_FORMAT_CSV : CLIFT_FORMAT_JSON;
    if (*wr) {
      json_only(g, "wronskian");
      auto curve = load_curve(curve_arg);
      std::string out = params.size() > 1 ? "[" : "";
      for (std::size_t i = 0; i < params.size(); ++i) {
        char* text = nullptr;
        check(clift_wronskian(curve.get(), params[i].c_str(), &text));
        out += (i ? "," : "") + take(text);
      }
      emit(g, params.size() > 1 ? out + "]" : out);
    } else if (*cert) {
      json_only(g, "certify");
      auto curve = load_curve(curve_arg);
      char* text = nullptr;
      check(clift_certify(curve.get(), c0, grid, &text));
      emit(g, take(text));
    } else if (*lift) {
      json_only(g, "lift");
      auto curve = load_curve(curve_arg);
      auto monomials = load_monomials(monomials_arg);
      clift_curve* lifted = nullptr;
      check(clift_lift(curve.get(), monomials.get(), &lifted));
      CurvePtr owned(lifted);
      char* text = nullptr;
      check(clift_curve_to_json(owned.get(), &text));
      std::string out = "{\"curve\":" + take(text);
      if (lattice_n != 0) {
        check(clift_bijection(curve.get(), monomials.get(), lattice_n, &text));
        out += ",\"bijection\":" + take(text);
      }
      emit(g, out + "}");
    } else if (*expo) {
      json_only(g, "exponent");
      auto monomials = load_monomials(monomials_arg);
      char* text = nullptr;
      check(clift_exponent(monomials.get(), &text));
      emit(g, take(text));
    } else if (app.got_subcommand("count")) {
      json_only(g, "count");
      require_config(g, "count");
      char* text = nullptr;
      check(clift_count(read_file(g.config).c_str(), parent_dir(g.config).c_str(), &text));
      emit(g, take(text));
    } else if (*energy) {
      require_config(g, "energy");
      char* text = nullptr;
      if (sweep) {
        check(clift_experiment(read_file(g.config).c_str(), parent_dir(g.config).c_str(),
                               "energy", format, g.timing ? 1 : 0, g.cap, &text));
      } else {
        json_only(g, "energy");
        check(clift_energy(read_file(g.config).c_str(), g.cap, &text));
      }
      emit(g, take(text));
    } else if (*hyp) {
      json_only(g, "hyperplanes");
      auto curve = load_curve(curve_arg);
      char* text = nullptr;
      if (!hyperplane_arg.empty()) {
        check(clift_intersect(curve.get(), hyperplane_arg.c_str(), &text));
      } else {
        check(clift_hyperplanes(curve.get(), hyper_trials, g.seed, &text));
      }
      emit(g, take(text));
    } else if (*exp) {
      require_config(g, "experiment");
      char* text = nullptr;
      check(clift_experiment(read_file(g.config).c_str(), parent_dir(g.config).c_str(),
                             mode.c_str(), format, g.timing ? 1 : 0, g.cap, &text));
      emit(g, take(text));
    } else if (*chk) {
      json_only(g, "check");
      char* text = nullptr;
      int failures = 0;
      check(clift_campaign(kind.c_str(), g.seed, trials, g.cap, &text, &failures));
      emit(g, take(text));
      if (failures > 0) return kExitCampaignFailure;
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return kExitUsage;
  }
  return 0;
}
