#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "curvelift/curve.hpp"
#include "curvelift/rational.hpp"

namespace curvelift {

// a_1 x_1 + ... + a_n x_n = a_0, scaled so that max_i>=1 |a_i| = 1.
class Hyperplane {
 public:
  Hyperplane(Rational a0, std::vector<Rational> normal);

  const Rational& offset() const { return a0_; }
  const std::vector<Rational>& normal() const { return a_; }
  std::size_t dimension() const { return a_.size(); }

 private:
  Rational a0_;
  std::vector<Rational> a_;
};

struct IntersectionRoot {
  double t = 0.0;
  // Isolating interval; lo == hi for exact rational roots. Exact path only.
  std::optional<Rational> lo, hi;
  // Even multiplicity: the curve touches without crossing.
  bool tangential = false;
};

struct IntersectionResult {
  std::vector<IntersectionRoot> roots;
  bool exact = false;
  // The curve lies inside the hyperplane (infinitely many intersections).
  bool contained = false;
  // False when the floating grid could not guarantee separated roots.
  bool certified = true;
};

inline constexpr int kDefaultIntersectionGrid = 2048;

// Roots in [t_lo, t_hi] of g(t) = Σ a_i γ_i(t) - a_0, counted once each.
IntersectionResult intersect(const CurveSpec& curve, const Hyperplane& plane,
                             int grid = kDefaultIntersectionGrid);

// (t, f_2, ..., f_n) -> (f_2', ..., f_n').
CurveSpec derivative_curve(const CurveSpec& graph);

// Reparameterizes a polynomial curve whose first coordinate is affine and
// non-constant so that it becomes t.
CurveSpec to_graph_form(const CurveSpec& curve);

struct IntersectionEstimate {
  // Largest root count observed: an empirical lower estimate of the uniform
  // bound, not the bound itself.
  std::size_t max_count = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  std::optional<Hyperplane> witness;
  bool all_certified = true;
};

// Random hyperplanes with coefficients uniform on [-1, 1].
Hyperplane random_hyperplane(std::size_t dimension, std::mt19937_64& rng);
IntersectionEstimate max_intersections(const CurveSpec& curve, int trials, std::uint64_t seed,
                                       int grid = kDefaultIntersectionGrid);

struct MvtReport {
  std::size_t roots = 0;
  std::size_t derivative_roots = 0;
  // Every gap between consecutive roots contains a root of g'.
  bool holds = true;
};

// For H: Σ a_i x_i = a_0 on a graph curve, checks the roots of
// a_1 + Σ_{i>=2} a_i f_i'(t) against the roots of H.
MvtReport check_mean_value(const CurveSpec& graph, const Hyperplane& plane,
                           int grid = kDefaultIntersectionGrid);

}  // namespace curvelift
