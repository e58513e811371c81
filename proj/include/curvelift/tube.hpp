#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "curvelift/curve.hpp"
#include "curvelift/point_sets.hpp"
#include "curvelift/rational.hpp"

namespace curvelift {

// (1/N)Z^n restricted to the closed box Π [lo_i, hi_i].
struct LatticeSource {
  std::uint64_t n = 1;
  std::vector<Rational> lo;
  std::vector<Rational> hi;
};

using TubeSource = std::variant<FiniteSet, LatticeSource, Gap>;

// Points at distance <= delta from the curve (closed neighborhood).
struct TubeQuery {
  CurveSpec curve;
  Rational delta;
  TubeSource source;
  bool retain_points = false;
  WorkCaps caps;
};

// d / N^n.
Rational scaled_delta(const Rational& d, std::uint64_t n_scale, unsigned exponent);

// [0, 1]^dim at spacing 1/N.
LatticeSource unit_box_lattice(std::uint64_t n, std::size_t dim = 2);

struct CountResult {
  std::uint64_t count = 0;
  // Sorted; populated when retain_points is set.
  std::optional<std::vector<ExactPoint>> points;
  std::uint64_t arcs_examined = 0;
  // Candidates whose floating distance landed in the ambiguity band.
  std::uint64_t ambiguous = 0;
  // Of those, how many were decided exactly (exact curves only).
  std::uint64_t resolved_exactly = 0;
  // False when some ambiguous candidate could not be decided exactly.
  bool certified = true;
};

// Arc subdivision plus a spatial index; see tube.cpp.
CountResult count_in_tube(const TubeQuery& query);

// Γ ∩ (1/N Z)^2 for a polynomial graph y = f(x), x in [x_lo, x_hi] ∩ domain.
FiniteSet count_on_curve_lattice(const CurveSpec& graph, std::uint64_t n, const Rational& x_lo,
                                 const Rational& x_hi);
FiniteSet count_on_curve_lattice(const CurveSpec& graph, std::uint64_t n);

// Dense parameter sampling with local refinement; independent of the arc
// machinery and used to validate it.
CountResult brute_force_tube_oracle(const TubeQuery& query);

}  // namespace curvelift
