#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "curvelift/curve.hpp"
#include "curvelift/monomial.hpp"
#include "curvelift/point_sets.hpp"
#include "curvelift/rational.hpp"

namespace curvelift {

// {M^2 : M >= 2, M^2 <= n_max}.
std::vector<std::uint64_t> squares_up_to(std::uint64_t n_max);

struct ExperimentConfig {
  CurveSpec curve = make_moment_curve(2);
  std::optional<MonomialSet> monomials;
  std::vector<std::uint64_t> schedule;
  // δ = d / N^exponent; the exponent defaults to |M| when a monomial set is
  // given and to 2 otherwise. on_curve counts Γ ∩ (1/N Z)^2 exactly (δ = 0).
  Rational d = 1;
  std::optional<unsigned> delta_exponent;
  bool on_curve = false;
  // Lattice box; empty means [0, 1]^n.
  std::vector<Rational> box_lo, box_hi;
  // Energy order; defaults to n(n + 1)/2 for a curve in R^n.
  std::optional<int> energy_order;
  std::uint64_t seed = 0;
  WorkCaps caps;
  // Per-row wall time is always measured; emitting it makes reports
  // non-reproducible, so JSON carries it only on request.
  bool record_runtime = false;

  void validate() const;
  unsigned resolved_delta_exponent() const;
  int resolved_energy_order() const;
};

struct SlopeFit {
  double slope = 0.0;
  double intercept = 0.0;
  // Sum of squared residuals in log space.
  double residual = 0.0;
  std::size_t points = 0;
};

// Ordinary least squares on (ln x, ln y) over points with x, y > 0. Returns
// nothing (and sets *note) when fewer than three points qualify or all y are
// equal.
std::optional<SlopeFit> fit_power_law(const std::vector<std::pair<double, double>>& data,
                                      std::string* note = nullptr);

inline constexpr double kVerdictMargin = 0.1;

struct CountRow {
  std::uint64_t n = 0;
  Rational delta;
  std::uint64_t count = 0;
  bool certified = true;
  double runtime_ms = 0.0;
};

struct CountReport {
  std::string curve_kind;
  std::optional<MonomialSet> monomials;
  std::optional<Rational> theoretical_exponent;
  bool on_curve = false;
  std::vector<CountRow> rows;
  std::optional<SlopeFit> fit;
  std::string fit_note;
  // Set when both a fit and e(M) exist: slope <= e(M) + margin. A false value
  // is reported as exceeding the margin, never as a refutation.
  std::optional<bool> within_margin;
  double margin = kVerdictMargin;
};

CountReport run_exponent_experiment(const ExperimentConfig& config);

struct EnergyRow {
  std::uint64_t n = 0;
  std::size_t size_b = 0;
  int m = 0;
  std::optional<Integer> energy;
  // E_m(B) / |B|^m.
  std::optional<Rational> ratio;
  bool skipped = false;
  std::string note;
  double runtime_ms = 0.0;
};

struct EnergyReport {
  std::string curve_kind;
  int m = 0;
  std::vector<EnergyRow> rows;
  // Power-law trend of the ratio in N.
  std::optional<SlopeFit> trend;
  std::string trend_note;
};

EnergyReport run_energy_experiment(const ExperimentConfig& config);

enum class CampaignKind { kEnergyBound, kPlunnecke, kLipschitz, kBijection, kGapDoubling };
std::string to_string(CampaignKind kind);
CampaignKind parse_campaign_kind(const std::string& name);

struct CampaignReport {
  CampaignKind kind = CampaignKind::kEnergyBound;
  std::uint64_t seed = 0;
  int trials = 0;
  int passes = 0;
  int failures = 0;
  // JSON description of the first failing instance.
  std::optional<std::string> counterexample;
};

// Runs randomized instances of one checker; stops at the first failure.
CampaignReport run_inequality_campaign(CampaignKind kind, std::uint64_t seed, int trials,
                                       const WorkCaps& caps = {});

// Random proper GAP with gap dimension in [1, max_dim], integer generators in
// Z^2 and Π N_i <= max_size.
Gap random_proper_gap(std::mt19937_64& rng, int max_dim, std::uint64_t max_size);

}  // namespace curvelift
