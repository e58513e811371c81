#include <random>

#include "doctest.h"
#include "support.hpp"
#include "curvelift/error.hpp"
#include "curvelift/tube.hpp"

using namespace curvelift;

namespace {

ExactPoint pt(std::initializer_list<Rational> c) { return ExactPoint{std::vector<Rational>(c)}; }

Polynomial poly(std::initializer_list<Rational> c) { return Polynomial(std::vector<Rational>(c)); }

CurveSpec parabola() { return make_moment_curve(2); }
CurveSpec cubic() { return make_polynomial_graph({poly({0, 0, 0, 1})}); }

LatticeSource square_lattice(std::uint64_t n, long lo, long hi) {
  return LatticeSource{n, {Rational(lo), Rational(lo)}, {Rational(hi), Rational(hi)}};
}

TubeQuery query(const CurveSpec& c, Rational delta, TubeSource source, bool retain = false) {
  return TubeQuery{c, std::move(delta), std::move(source), retain, {}};
}

}  // namespace

TEST_CASE("on-curve lattice enumeration") {
  auto on4 = count_on_curve_lattice(parabola(), 4);
  CHECK(on4 == FiniteSet({pt({0, 0}), pt({ratio(1, 2), ratio(1, 4)}), pt({1, 1})}));
  for (long m = 2; m <= 20; ++m) {
    CHECK(count_on_curve_lattice(parabola(), static_cast<std::uint64_t>(m * m)).size() ==
          static_cast<std::size_t>(m + 1));
  }
  auto shifted = make_polynomial_graph({poly({ratio(1, 3), 0, 1})});
  auto on3 = count_on_curve_lattice(shifted, 3);
  CHECK(on3.size() == 2);
  CHECK(on3.points()[0] == pt({0, ratio(1, 3)}));
  CHECK(count_on_curve_lattice(parabola(), 16, ratio(1, 4), ratio(3, 4)).size() == 3);
  CHECK_THROWS_AS(count_on_curve_lattice(CurveSpec::circle_arc(), 4), Error);
  try {
    count_on_curve_lattice(make_moment_curve(3), 4);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInvalidForm);
  }
}

TEST_CASE("tube count examples") {
  auto r = count_in_tube(query(parabola(), ratio(1, 16), unit_box_lattice(4), true));
  CHECK(r.certified);
  for (const auto& p : count_on_curve_lattice(parabola(), 4)) {
    CHECK(std::binary_search(r.points->begin(), r.points->end(), p));
  }
  CHECK(r.count == r.points->size());

  auto all = count_in_tube(query(parabola(), 10, unit_box_lattice(6)));
  CHECK(all.count == 49);

  auto segment = CurveSpec::polynomial(CurveKind::kPolynomialParametric,
                                       {Polynomial::identity(), Polynomial()});
  FiniteSet two({pt({ratio(1, 2), ratio(1, 20)}), pt({ratio(1, 2), ratio(1, 5)})});
  auto seg = count_in_tube(query(segment, ratio(1, 10), two, true));
  CHECK(seg.count == 1);
  CHECK(seg.points->front() == pt({ratio(1, 2), ratio(1, 20)}));
  CHECK(brute_force_tube_oracle(query(segment, ratio(1, 10), two)).count == 1);
}

TEST_CASE("tube queries validate input") {
  CHECK_THROWS_AS(count_in_tube(query(parabola(), 0, unit_box_lattice(4))), Error);
  CHECK_THROWS_AS(count_in_tube(query(parabola(), 1, unit_box_lattice(4, 3))), Error);
  CHECK_THROWS_AS(count_in_tube(query(parabola(), 1, FiniteSet({pt({0, 0, 0})}))), Error);
  CHECK(count_in_tube(query(parabola(), 1, FiniteSet())).count == 0);
}

TEST_CASE("boundary points are inside and decided exactly") {
  // (1 + 1/4, 0) is at distance exactly 1/4 from the unit circle.
  auto circle = make_rational_unit_circle();
  auto r = count_in_tube(query(circle, ratio(1, 4), FiniteSet({pt({ratio(5, 4), 0})})));
  CHECK(r.count == 1);
  CHECK(r.ambiguous == 1);
  CHECK(r.resolved_exactly == 1);
  CHECK(r.certified);
  // Vertical distance exactly delta from the segment endpoint region.
  auto segment = CurveSpec::polynomial(CurveKind::kPolynomialParametric,
                                       {Polynomial::identity(), Polynomial()});
  auto edge = count_in_tube(query(segment, ratio(1, 10), FiniteSet({pt({ratio(1, 3), ratio(1, 10)}),
                                                                    pt({ratio(11, 10), 0}),
                                                                    pt({ratio(111, 100), 0})})));
  CHECK(edge.count == 2);
  CHECK(edge.certified);
}

TEST_CASE("tube count agrees with the dense oracle") {
  struct Case {
    CurveSpec curve;
    LatticeSource (*box)(std::uint64_t);
  };
  auto unit = [](std::uint64_t n) { return square_lattice(n, 0, 1); };
  auto wide = [](std::uint64_t n) { return square_lattice(n, -1, 1); };
  std::vector<Case> cases = {{parabola(), unit}, {cubic(), unit}, {CurveSpec::circle_arc(), wide}};
  for (const auto& c : cases) {
    for (std::uint64_t n : {8u, 16u, 32u}) {
      for (long d : {1L, 4L}) {
        const Rational delta = scaled_delta(d, n, 2);
        auto fast = count_in_tube(query(c.curve, delta, c.box(n), true));
        auto slow = brute_force_tube_oracle(query(c.curve, delta, c.box(n), true));
        CHECK(fast.certified);
        CHECK(slow.certified);
        CHECK(fast.count == slow.count);
        CHECK(*fast.points == *slow.points);
      }
    }
  }
}

TEST_CASE("tube counts are monotone in delta") {
  for (const auto& curve : {parabola(), cubic()}) {
    std::uint64_t prev = 0;
    for (long k : {1L, 2L, 3L, 5L, 8L, 13L, 40L, 200L}) {
      auto r = count_in_tube(query(curve, ratio(k, 1000), unit_box_lattice(20)));
      CHECK(r.certified);
      CHECK(r.count >= prev);
      prev = r.count;
    }
  }
}

TEST_CASE("on-curve points lie in every tube") {
  for (std::uint64_t n : {9u, 16u, 36u, 100u}) {
    auto on = count_on_curve_lattice(parabola(), n);
    const Rational tiny = scaled_delta(1, n, 5);
    auto r = count_in_tube(query(parabola(), tiny, unit_box_lattice(n), true));
    CHECK(FiniteSet(*r.points) == on);
    auto wider = count_in_tube(query(parabola(), scaled_delta(1, n, 2), unit_box_lattice(n), true));
    CHECK(on.is_subset_of(FiniteSet(*wider.points)));
  }
}

TEST_CASE("translation equivariance") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 8; ++trial) {
    const Rational tx = testing::random_rational(rng, 2, 7);
    const Rational ty = testing::random_rational(rng, 2, 7);
    std::vector<ExactPoint> pts;
    for (int i = 0; i < 300; ++i) {
      pts.push_back(pt({testing::random_rational(rng, 1, 24), testing::random_rational(rng, 1, 24)}));
    }
    FiniteSet source(pts);
    const auto c = parabola().coordinates();
    auto moved = CurveSpec::polynomial(CurveKind::kPolynomialParametric,
                                       {c[0] + Polynomial(tx), c[1] + Polynomial(ty)});
    const Rational delta = ratio(1, 20);
    auto base = count_in_tube(query(parabola(), delta, source));
    auto shifted = count_in_tube(query(moved, delta, source.translate(pt({tx, ty}))));
    CHECK(base.certified);
    CHECK(base.count == shifted.count);
    CHECK(base.count == brute_force_tube_oracle(query(parabola(), delta, source)).count);
  }
}

TEST_CASE("GAP sources") {
  Gap g{pt({0, 0}), {pt({ratio(1, 8), 0}), pt({0, ratio(1, 8)})}, {8, 8}};
  auto via_gap = count_in_tube(query(parabola(), ratio(1, 64), g));
  auto via_set = count_in_tube(query(parabola(), ratio(1, 64), gap_enumerate(g)));
  CHECK(via_gap.count == via_set.count);
  CHECK(via_gap.count == brute_force_tube_oracle(query(parabola(), ratio(1, 64), g)).count);
}
