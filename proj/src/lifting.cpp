#include "curvelift/lifting.hpp"

#include <cmath>

#include "curvelift/error.hpp"

namespace curvelift {

ExactPoint lift_point(const ExactPoint& p, const MonomialSet& monomials) {
  require(p.dimension() == 2, ErrorCode::kInvalidDimension, "lifts act on planar points");
  ExactPoint out;
  out.coords.reserve(monomials.size());
  for (const auto& m : monomials.monomials()) {
    out.coords.push_back(pow(p[0], m.a) * pow(p[1], m.b));
  }
  return out;
}

CurveSpec lift_curve(const CurveSpec& curve, const MonomialSet& monomials) {
  require(curve.dimension() == 2, ErrorCode::kInvalidDimension,
          "lifts need a planar curve, got dimension " + std::to_string(curve.dimension()));
  require(monomials.size() >= 1, ErrorCode::kInvalidArgument, "empty monomial set");
  const auto& x = curve.coordinates();
  if (curve.is_polynomial()) {
    std::vector<Polynomial> coords;
    for (const auto& m : monomials.monomials()) coords.push_back(pow(x[0], m.a) * pow(x[1], m.b));
    return CurveSpec::polynomial(CurveKind::kLifted, std::move(coords), curve.t_lo(),
                                 curve.t_hi(), curve.smoothness_order());
  }
  if (curve.is_rational()) {
    const auto& q = curve.denominators();
    std::vector<Polynomial> nums, dens;
    for (const auto& m : monomials.monomials()) {
      nums.push_back(pow(x[0], m.a) * pow(x[1], m.b));
      dens.push_back(pow(q[0], m.a) * pow(q[1], m.b));
    }
    return CurveSpec::rational(std::move(nums), std::move(dens), curve.t_lo(), curve.t_hi(),
                               curve.smoothness_order(), CurveKind::kLifted);
  }
  return CurveSpec::lifted_floating(curve, monomials);
}

WronskianValue lifted_wronskian(const CurveSpec& curve, const MonomialSet& monomials,
                                const Rational& t) {
  return wronskian(lift_curve(curve, monomials), t);
}

Rational exponent(const MonomialSet& monomials) {
  const long n = static_cast<long>(monomials.size());
  require(n >= 2, ErrorCode::kInvalidArgument, "exponent needs at least two monomials");
  long total = 0;
  for (unsigned d : monomials.degrees()) total += d;
  return ratio(2 * total, static_cast<unsigned long>(n * (n + 1)));
}

MonomialSet make_Ms(int s) {
  require(s >= 1, ErrorCode::kInvalidArgument, "s must be >= 1");
  std::vector<Monomial> out;
  for (unsigned d = 1; d <= static_cast<unsigned>(s); ++d) {
    for (unsigned b = 0; b <= d; ++b) out.push_back(Monomial{d - b, b});
  }
  return MonomialSet(std::move(out));
}

double lipschitz_constant(const MonomialSet& monomials, double radius) {
  require(radius >= 1.0, ErrorCode::kInvalidArgument, "Lipschitz radius must be >= 1");
  double sum = 0.0;
  for (unsigned d : monomials.degrees()) {
    sum += static_cast<double>(d) * d * std::pow(radius, 2.0 * d - 2.0);
  }
  return std::sqrt(sum);
}

Rational lipschitz_constant_squared(const MonomialSet& monomials, const Rational& radius) {
  require(radius >= 1, ErrorCode::kInvalidArgument, "Lipschitz radius must be >= 1");
  Rational sum = 0;
  for (unsigned d : monomials.degrees()) {
    sum += Rational(static_cast<long>(d * d)) * pow(radius, 2 * d - 2);
  }
  return sum;
}

BijectionReport check_lattice_bijection(const CurveSpec& curve, const MonomialSet& monomials,
                                        std::uint64_t n, const FiniteSet& on_curve_points) {
  require(curve.dimension() == 2, ErrorCode::kInvalidDimension, "bijection needs a planar curve");
  require(monomials.has_coordinate_prefix(), ErrorCode::kInvalidArgument,
          "bijection needs m_1 = x and m_2 = y");
  require(n >= 1, ErrorCode::kInvalidArgument, "N must be >= 1");
  const Integer big_n(std::to_string(n));

  BijectionReport r;
  r.n = monomials.size();
  r.degrees = monomials.degrees();
  r.exponent = exponent(monomials);
  r.cardinality_base = on_curve_points.size();

  std::vector<ExactPoint> lifted;
  for (const auto& p : on_curve_points) {
    require(p.dimension() == 2, ErrorCode::kInvalidDimension, "on-curve points must be planar");
    for (const auto& c : p.coords) {
      require(mpz_divisible_p(big_n.get_mpz_t(), c.get_den_mpz_t()) != 0,
              ErrorCode::kInvalidArgument, "point " + to_string(c) + " is not in (1/N)Z");
    }
    ExactPoint q = lift_point(p, monomials);
    for (std::size_t i = 0; i < q.dimension(); ++i) {
      const Integer scale = pow(big_n, r.degrees[i]);
      if (mpz_divisible_p(scale.get_mpz_t(), q[i].get_den_mpz_t()) == 0 && r.denominators_ok) {
        r.denominators_ok = false;
        r.counterexample = "coordinate " + std::to_string(i + 1) + " of the lift of (" +
                           to_string(p[0]) + ", " + to_string(p[1]) + ") is " + to_string(q[i]);
      }
    }
    lifted.push_back(std::move(q));
  }
  const FiniteSet image(std::move(lifted));
  r.cardinality_lifted = image.size();
  r.injective = r.cardinality_lifted == r.cardinality_base;
  if (!r.injective && !r.counterexample) r.counterexample = "two base points share a lift";
  r.bijection = r.injective && r.denominators_ok;
  return r;
}

}  // namespace curvelift
