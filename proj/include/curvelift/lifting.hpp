#pragma once

#include <optional>
#include <string>
#include <vector>

#include "curvelift/curve.hpp"
#include "curvelift/monomial.hpp"
#include "curvelift/point_sets.hpp"
#include "curvelift/rational.hpp"

namespace curvelift {

// (m_1(x, y), ..., m_n(x, y)).
ExactPoint lift_point(const ExactPoint& p, const MonomialSet& monomials);

// Γ^M. Polynomial and rational base curves lift to exact curves of the same
// representation; the circle lifts to a floating curve.
CurveSpec lift_curve(const CurveSpec& curve, const MonomialSet& monomials);

WronskianValue lifted_wronskian(const CurveSpec& curve, const MonomialSet& monomials,
                                const Rational& t);

// e(M) = 2 / (n (n + 1)) Σ deg m_i.
Rational exponent(const MonomialSet& monomials);

// {x^i y^j : 1 <= i + j <= s}.
MonomialSet make_Ms(int s);

// C(M) = sqrt(Σ deg(m_i)^2 R^(2 deg(m_i) - 2)), for R >= 1.
double lipschitz_constant(const MonomialSet& monomials, double radius);
// C(M)^2, exactly.
Rational lipschitz_constant_squared(const MonomialSet& monomials, const Rational& radius);

struct BijectionReport {
  std::size_t n = 0;
  std::vector<unsigned> degrees;
  Rational exponent;
  std::size_t cardinality_base = 0;
  std::size_t cardinality_lifted = 0;
  // Every lifted coordinate i lies in N^(-d_i) Z.
  bool denominators_ok = true;
  bool injective = true;
  bool bijection = false;
  std::optional<std::string> counterexample;
};

// Lifts lattice points of (1/N Z)^2 already known to lie on the curve and
// checks the lattice bijection onto Γ^M ∩ Π (1/N^(d_i)) Z.
BijectionReport check_lattice_bijection(const CurveSpec& curve, const MonomialSet& monomials,
                                        std::uint64_t n, const FiniteSet& on_curve_points);

}  // namespace curvelift
