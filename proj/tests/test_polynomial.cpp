#include <random>

#include "doctest.h"
#include "support.hpp"
#include "curvelift/error.hpp"
#include "curvelift/polynomial.hpp"

using namespace curvelift;

TEST_CASE("rational literals round-trip") {
  CHECK(parse_rational("3/6") == ratio(1, 2));
  CHECK(parse_rational("-4") == -4);
  CHECK(parse_rational(" +2/3 ") == ratio(2, 3));
  CHECK(to_string(ratio(-6, 4)) == "-3/2");
  CHECK(to_string(Rational(5)) == "5");
  CHECK_THROWS_AS(parse_rational("0.5"), Error);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("1/-2"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
}

TEST_CASE("polynomial arithmetic") {
  Polynomial p({1, -3, 0, 2});  // 2t^3 - 3t + 1
  CHECK(p.degree() == 3);
  CHECK(p(ratio(1, 2)) == ratio(1, 4) - ratio(3, 2) + 1);
  CHECK(p.derivative() == Polynomial({-3, 0, 6}));
  CHECK(p.derivative(4).is_zero());
  auto taylor = p.taylor_at(2, 5);
  // p(2) = 11, p'(2) = 21, p''(2)/2 = 12, p'''(2)/6 = 2.
  CHECK(taylor == std::vector<Rational>{11, 21, 12, 2, 0});
  auto [q, r] = divmod(p, Polynomial({-1, 1}));
  CHECK(r.is_zero());
  CHECK(q * Polynomial({-1, 1}) == p);
  CHECK(p.compose(Polynomial({0, 2})) == Polynomial({1, -6, 0, 16}));
  CHECK(gcd(Polynomial({-1, 0, 1}), Polynomial({1, 1})) == Polynomial({1, 1}));
  // (t - 1)^2 (t + 2) -> (t - 1)(t + 2) up to scale.
  auto sq = squarefree_part(Polynomial({-1, 1}) * Polynomial({-1, 1}) * Polynomial({2, 1}));
  CHECK(sq.degree() == 2);
}

TEST_CASE("root isolation finds distinct roots in a closed interval") {
  // (t)(t - 1/2)(t - 1)^2 on [0, 1]: three distinct roots, two at endpoints.
  Polynomial p = Polynomial({0, 1}) * Polynomial({ratio(-1, 2), 1}) *
                 pow(Polynomial({-1, 1}), 2);
  auto roots = isolate_real_roots(p, 0, 1);
  REQUIRE(roots.size() == 3);
  CHECK(roots[0].exact());
  CHECK(roots[0].lo == 0);
  CHECK(roots[1].approx == doctest::Approx(0.5));
  CHECK(roots[2].hi == 1);

  // t^2 - 2 on [0, 2]: irrational root refined to the requested width.
  auto sqrt2 = isolate_real_roots(Polynomial({-2, 0, 1}), 0, 2, ratio(1, 1 << 20));
  REQUIRE(sqrt2.size() == 1);
  CHECK(sqrt2[0].hi - sqrt2[0].lo <= ratio(1, 1 << 20));
  CHECK(sqrt2[0].lo * sqrt2[0].lo < 2);
  CHECK(sqrt2[0].hi * sqrt2[0].hi > 2);

  CHECK(isolate_real_roots(Polynomial({1, 0, 1}), -5, 5).empty());
  CHECK_THROWS_AS(isolate_real_roots(Polynomial(), 0, 1), Error);
}

TEST_CASE("root isolation agrees with a product of known linear factors") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Rational> chosen;
    Polynomial p(Rational(1));
    const int k = static_cast<int>(testing::uniform_int(rng, 1, 6));
    for (int i = 0; i < k; ++i) {
      Rational r = ratio(testing::uniform_int(rng, -20, 20), 16);
      chosen.push_back(r);
      p = p * Polynomial({-r, 1});
    }
    std::sort(chosen.begin(), chosen.end());
    chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
    std::vector<Rational> inside;
    for (const auto& r : chosen) {
      if (r >= ratio(-1, 2) && r <= 1) inside.push_back(r);
    }
    auto roots = isolate_real_roots(p, ratio(-1, 2), 1);
    REQUIRE(roots.size() == inside.size());
    for (std::size_t i = 0; i < roots.size(); ++i) {
      CHECK(roots[i].lo <= inside[i]);
      CHECK(inside[i] <= roots[i].hi);
    }
  }
}
