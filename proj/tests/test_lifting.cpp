#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "support.hpp"
#include "curvelift/error.hpp"
#include "curvelift/lifting.hpp"

using namespace curvelift;

namespace {

ExactPoint pt(std::initializer_list<Rational> c) { return ExactPoint{std::vector<Rational>(c)}; }

MonomialSet ms(std::initializer_list<Monomial> m) { return MonomialSet(std::vector<Monomial>(m)); }

CurveSpec parabola() { return make_moment_curve(2); }

Polynomial t_pow(unsigned k) { return Polynomial::monomial(k, 1); }

// Lattice points (x, x^2) with x, x^2 in (1/N)Z and x in [0, 1], by direct scan.
FiniteSet parabola_lattice_points(long n) {
  std::vector<ExactPoint> out;
  for (long i = 0; i <= n; ++i) {
    Rational x = ratio(i, static_cast<unsigned long>(n));
    Rational y = x * x;
    if (Integer(n) % y.get_den() == 0) out.push_back(pt({x, y}));
  }
  return FiniteSet(out);
}

}  // namespace

TEST_CASE("lift_point examples") {
  CHECK(lift_point(pt({ratio(1, 2), ratio(1, 4)}), ms({{1, 0}, {0, 1}, {2, 0}})).coords ==
        std::vector<Rational>{ratio(1, 2), ratio(1, 4), ratio(1, 4)});
  CHECK(lift_point(pt({0, 0}), make_Ms(3)).coords == std::vector<Rational>(9, 0));
  CHECK(lift_point(pt({ratio(2, 3), ratio(1, 3)}), make_Ms(2)).coords ==
        std::vector<Rational>{ratio(2, 3), ratio(1, 3), ratio(4, 9), ratio(2, 9), ratio(1, 9)});
  CHECK_THROWS_AS(lift_point(pt({1, 2, 3}), make_Ms(1)), Error);
}

TEST_CASE("lift_point projects back to the base point") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    ExactPoint p = pt({testing::random_rational(rng, 5, 9), testing::random_rational(rng, 5, 9)});
    const int s = static_cast<int>(testing::uniform_int(rng, 1, 5));
    ExactPoint q = lift_point(p, make_Ms(s));
    CHECK(q[0] == p[0]);
    CHECK(q[1] == p[1]);
  }
}

TEST_CASE("lift_curve of the parabola") {
  auto same = lift_curve(parabola(), make_Ms(1));
  CHECK(same.kind() == CurveKind::kLifted);
  CHECK(same.coordinates() == parabola().coordinates());

  auto dup = lift_curve(parabola(), ms({{1, 0}, {0, 1}, {2, 0}}));
  CHECK(dup.coordinates() == std::vector<Polynomial>{t_pow(1), t_pow(2), t_pow(2)});
  CHECK(wronskian_polynomial(dup).is_zero());

  auto moment = lift_curve(parabola(), ms({{1, 0}, {0, 1}, {1, 1}}));
  CHECK(moment.coordinates() == make_moment_curve(3).coordinates());

  CHECK_THROWS_AS(lift_curve(make_moment_curve(3), make_Ms(1)), Error);
  try {
    lift_curve(make_moment_curve(3), make_Ms(1));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInvalidDimension);
  }
}

TEST_CASE("lifted Wronskians") {
  const auto xyxy = ms({{1, 0}, {0, 1}, {1, 1}});
  for (int k = 0; k <= 16; ++k) {
    CHECK(*lifted_wronskian(parabola(), xyxy, ratio(k, 16)).exact == 12);
  }
  // (t, t^2, t^4): det [[1, 2t, 4t^3], [0, 2, 12t^2], [0, 0, 24t]] = 48t.
  const auto xyy2 = ms({{1, 0}, {0, 1}, {0, 2}});
  CHECK(wronskian_polynomial(lift_curve(parabola(), xyy2)) == Polynomial::monomial(1, 48));
  for (int k = 0; k <= 10; ++k) {
    CHECK(*lifted_wronskian(parabola(), xyy2, ratio(k, 10)).exact == ratio(48 * k, 10));
  }
}

TEST_CASE("circle lifts by M2 lie in a hyperplane and have vanishing Wronskian") {
  const auto m2 = make_Ms(2);
  auto exact_circle = make_rational_unit_circle();
  auto lifted = lift_curve(exact_circle, m2);
  CHECK(lifted.is_rational());
  for (int k = 0; k <= 32; ++k) {
    const Rational t = ratio(k, 32);
    Jet jet = eval_jet(lifted, t, 0);
    // x^2 + y^2 = 1 is the relation x_3 + x_5 = 1.
    CHECK(jet.exact_point[2] + jet.exact_point[4] == 1);
    CHECK(*lifted_wronskian(exact_circle, m2, t).exact == 0);
  }
  auto circle = CurveSpec::circle_arc();
  double worst = 0.0;
  for (int k = 0; k <= 256; ++k) {
    worst = std::max(worst, std::abs(lifted_wronskian(circle, m2, ratio(k, 256)).value));
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("exponent and M_s") {
  CHECK(exponent(make_Ms(1)) == ratio(2, 3));
  CHECK(exponent(make_Ms(2)) == ratio(8, 15));
  CHECK(exponent(make_Ms(3)) == ratio(4, 9));
  for (int s = 1; s <= 6; ++s) {
    CHECK(make_Ms(s).size() == static_cast<std::size_t>((s + 1) * (s + 2) / 2 - 1));
    CHECK(exponent(make_Ms(s)) == ratio(8, static_cast<unsigned long>(3 * (s + 3))));
    CHECK(make_Ms(s).has_coordinate_prefix());
  }
  CHECK(make_Ms(2).monomials() ==
        std::vector<Monomial>{{1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}});
  CHECK_THROWS_AS(make_Ms(0), Error);
  CHECK_THROWS_AS(exponent(ms({{1, 0}})), Error);
}

TEST_CASE("Lipschitz constant") {
  CHECK(lipschitz_constant(make_Ms(1), 1.0) == doctest::Approx(std::sqrt(2.0)));
  CHECK(lipschitz_constant(make_Ms(2), 1.0) == doctest::Approx(std::sqrt(14.0)));
  CHECK(lipschitz_constant(ms({{1, 0}, {0, 1}, {2, 0}}), 2.0) == doctest::Approx(std::sqrt(18.0)));
  CHECK(lipschitz_constant_squared(make_Ms(2), 1) == 14);
  CHECK_THROWS_AS(lipschitz_constant(make_Ms(1), 0.5), Error);
}

TEST_CASE("Lipschitz bound holds on random pairs") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const long r = testing::uniform_int(rng, 1, 3);
    const Rational radius(r);
    auto coord = [&] { return testing::random_rational(rng, r, 8); };
    ExactPoint p = pt({coord(), coord()});
    ExactPoint q = pt({coord(), coord()});
    const auto m = make_Ms(static_cast<int>(testing::uniform_int(rng, 1, 4)));
    const Rational lhs = squared_distance(lift_point(p, m), lift_point(q, m));
    CHECK(lhs <= lipschitz_constant_squared(m, radius) * squared_distance(p, q));
  }
}

TEST_CASE("lattice bijection") {
  const auto xyxy = ms({{1, 0}, {0, 1}, {1, 1}});
  auto on4 = parabola_lattice_points(4);
  CHECK(on4.size() == 3);
  auto r = check_lattice_bijection(parabola(), xyxy, 4, on4);
  CHECK(r.cardinality_base == 3);
  CHECK(r.cardinality_lifted == 3);
  CHECK(r.denominators_ok);
  CHECK(r.bijection);
  CHECK(r.degrees == std::vector<unsigned>{1, 1, 2});
  CHECK(r.exponent == ratio(2, 3));

  auto on9 = parabola_lattice_points(9);
  CHECK(on9.size() == 4);
  auto r2 = check_lattice_bijection(parabola(), make_Ms(2), 9, on9);
  CHECK(r2.bijection);
  CHECK(r2.cardinality_lifted == 4);

  for (long n : {1L, 5L, 16L, 25L}) {
    auto pts = parabola_lattice_points(n);
    auto id = check_lattice_bijection(parabola(), make_Ms(1), static_cast<std::uint64_t>(n), pts);
    CHECK(id.bijection);
    CHECK(id.cardinality_lifted == pts.size());
  }

  CHECK_THROWS_AS(check_lattice_bijection(parabola(), ms({{2, 0}, {0, 1}}), 4, on4), Error);
  CHECK_THROWS_AS(check_lattice_bijection(parabola(), xyxy, 3, on4), Error);
}
