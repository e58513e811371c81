#include <random>

#include "doctest.h"
#include "support.hpp"
#include "curvelift/error.hpp"
#include "curvelift/point_sets.hpp"

using namespace curvelift;

namespace {

ExactPoint pt(std::initializer_list<Rational> c) { return ExactPoint{std::vector<Rational>(c)}; }

FiniteSet line(std::initializer_list<long> xs) {
  std::vector<std::vector<long>> pts;
  for (long x : xs) pts.push_back({x, 0});
  return FiniteSet::from_integers(pts);
}

FiniteSet interval(long lo, long hi) {
  std::vector<std::vector<long>> pts;
  for (long x = lo; x <= hi; ++x) pts.push_back({x, 0});
  return FiniteSet::from_integers(pts);
}

// Counts ordered 2m-tuples of integer points with equal half-sums directly.
std::uint64_t brute_energy(const std::vector<std::vector<long>>& a, int m) {
  const std::size_t n = a.size();
  const std::size_t d = a.front().size();
  std::uint64_t total = 1;
  for (int i = 0; i < 2 * m; ++i) total *= n;
  std::vector<std::size_t> idx(2 * m, 0);
  std::uint64_t hits = 0;
  for (std::uint64_t t = 0; t < total; ++t) {
    bool equal = true;
    for (std::size_t k = 0; k < d && equal; ++k) {
      long lhs = 0, rhs = 0;
      for (int i = 0; i < m; ++i) {
        lhs += a[idx[i]][k];
        rhs += a[idx[m + i]][k];
      }
      equal = lhs == rhs;
    }
    hits += equal;
    for (auto& v : idx) {
      if (++v < n) break;
      v = 0;
    }
  }
  return hits;
}

// Same count over exact rationals, for small sets and m <= 2.
std::uint64_t brute_energy_exact(const FiniteSet& a, int m) {
  const auto& pts = a.points();
  const std::size_t n = pts.size();
  std::uint64_t total = 1;
  for (int i = 0; i < 2 * m; ++i) total *= n;
  std::vector<std::size_t> idx(2 * m, 0);
  std::uint64_t hits = 0;
  for (std::uint64_t t = 0; t < total; ++t) {
    ExactPoint lhs = pts[idx[0]], rhs = pts[idx[m]];
    for (int i = 1; i < m; ++i) {
      lhs = lhs + pts[idx[i]];
      rhs = rhs + pts[idx[m + i]];
    }
    hits += lhs == rhs;
    for (auto& v : idx) {
      if (++v < n) break;
      v = 0;
    }
  }
  return hits;
}

std::vector<std::vector<long>> random_integer_points(std::mt19937_64& rng, std::size_t count,
                                                     long bound, std::size_t dim) {
  std::vector<std::vector<long>> pts;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<long> p;
    for (std::size_t k = 0; k < dim; ++k) p.push_back(testing::uniform_int(rng, -bound, bound));
    pts.push_back(p);
  }
  // Deduplicate so the oracle sees the same set.
  FiniteSet s = FiniteSet::from_integers(pts);
  std::vector<std::vector<long>> out;
  for (const auto& e : s) {
    std::vector<long> p;
    for (const auto& c : e.coords) p.push_back(c.get_num().get_si());
    out.push_back(p);
  }
  return out;
}

}  // namespace

TEST_CASE("finite sets are canonical and deduplicated") {
  FiniteSet s({pt({ratio(2, 4), 1}), pt({ratio(1, 2), 1}), pt({0, 0})});
  CHECK(s.size() == 2);
  CHECK(s.points()[0] == pt({0, 0}));
  CHECK(s.contains(pt({ratio(1, 2), 1})));
  CHECK_THROWS_AS(FiniteSet({pt({0}), pt({0, 1})}), Error);
}

TEST_CASE("GAP enumeration and properness") {
  Gap g1{pt({0, 0}), {pt({1, 0})}, {5}};
  FiniteSet e1 = gap_enumerate(g1);
  CHECK(e1 == line({1, 2, 3, 4, 5}));
  CHECK(is_proper(g1));

  Gap g2{pt({0, 0}), {pt({1, 0}), pt({2, 0})}, {2, 2}};
  CHECK(gap_enumerate(g2) == line({3, 4, 5, 6}));
  CHECK(is_proper(g2));

  Gap g3{pt({0, 0}), {pt({1, 0}), pt({1, 0})}, {2, 2}};
  CHECK(gap_enumerate(g3) == line({2, 3, 4}));
  CHECK_FALSE(is_proper(g3));

  WorkCaps tight;
  tight.enumeration = 3;
  CHECK_THROWS_AS(gap_enumerate(g2, tight), Error);
  Gap bad{pt({0, 0}), {pt({1, 0})}, {0}};
  CHECK_THROWS_AS(gap_enumerate(bad), Error);
}

TEST_CASE("minimal separation") {
  CHECK(min_separation(line({0, 1, 3})).distance == 1.0);
  std::vector<ExactPoint> lattice;
  for (long i = 0; i <= 10; ++i) {
    for (long j = 0; j <= 10; ++j) lattice.push_back(pt({ratio(i, 10), ratio(j, 10)}));
  }
  auto sep = min_separation(FiniteSet(lattice));
  CHECK(sep.squared == ratio(1, 100));
  CHECK(sep.distance == doctest::Approx(0.1).epsilon(1e-15));
  auto pyth = min_separation(FiniteSet({pt({0, 0}), pt({ratio(3, 5), ratio(4, 5)})}));
  CHECK(pyth.squared == 1);
  CHECK(pyth.distance == 1.0);
  CHECK_THROWS_AS(min_separation(line({7})), Error);
  try {
    min_separation(line({7}));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kUndefined);
  }
}

TEST_CASE("sumsets and doubling") {
  for (long n = 1; n <= 20; ++n) {
    FiniteSet a = interval(1, n);
    CHECK(sumset(a, a).size() == static_cast<std::size_t>(2 * n - 1));
    CHECK(doubling(a) == ratio(2 * n - 1, n));
  }
  FiniteSet square = FiniteSet::from_integers({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  CHECK(sumset(square, square).size() == 9);
  CHECK(doubling(square) == ratio(9, 4));
  CHECK_THROWS_AS(sumset(square, FiniteSet({pt({1})})), Error);

  // doubling() runs on scaled integer keys; the pairwise rational sumset is
  // its oracle.
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<ExactPoint> pts;
    for (int i = 0; i < 15; ++i) {
      pts.push_back(pt({testing::random_rational(rng, 3, 6), testing::random_rational(rng, 3, 6)}));
    }
    FiniteSet a(std::move(pts));
    CHECK(doubling(a) == Rational(static_cast<long>(sumset(a, a).size())) /
                             Rational(static_cast<long>(a.size())));
  }
}

TEST_CASE("m-fold sumsets") {
  FiniteSet a = line({0, 1, 3});
  CHECK(m_fold_sumset(a, 1) == a);
  CHECK(m_fold_sumset(line({0, 1}), 3) == line({0, 1, 2, 3}));
  CHECK(m_fold_sumset(a, 2) == line({0, 1, 2, 3, 4, 6}));
  CHECK(m_fold_sumset(a, 2) == sumset(a, a));
  // Support of the multiplicity map equals the deduplicated sumset.
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    FiniteSet s = FiniteSet::from_integers(random_integer_points(rng, 8, 6, 2));
    for (int m = 1; m <= 3; ++m) {
      auto phi = representation_counts(s, m);
      std::vector<ExactPoint> keys;
      Integer total = 0;
      for (const auto& [k, v] : phi) {
        keys.push_back(k);
        total += v;
      }
      CHECK(FiniteSet(keys) == m_fold_sumset(s, m));
      CHECK(total == pow(Integer(static_cast<long>(s.size())), static_cast<unsigned>(m)));
    }
  }
  CHECK_THROWS_AS(m_fold_sumset(a, 0), Error);
}

TEST_CASE("additive energy examples") {
  FiniteSet a = line({0, 1, 2});
  CHECK(additive_energy(a, 2) == 19);
  auto phi = representation_counts(a, 2);
  std::vector<Integer> counts;
  for (const auto& [k, v] : phi) counts.push_back(v);
  CHECK(counts == std::vector<Integer>{1, 2, 3, 2, 1});
  CHECK(additive_energy(line({5}), 4) == 1);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    FiniteSet s = FiniteSet::from_integers(random_integer_points(rng, 10, 20, 2));
    CHECK(additive_energy(s, 1) == static_cast<long>(s.size()));
  }
}

TEST_CASE("convolution energy matches brute force") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 24; ++trial) {
    const std::size_t size = static_cast<std::size_t>(testing::uniform_int(rng, 1, 12));
    const std::size_t dim = static_cast<std::size_t>(testing::uniform_int(rng, 1, 3));
    const long bound = testing::uniform_int(rng, 1, 5);
    auto pts = random_integer_points(rng, size, bound, dim);
    FiniteSet s = FiniteSet::from_integers(pts);
    for (int m = 1; m <= 3; ++m) {
      CHECK(additive_energy(s, m) == Integer(std::to_string(brute_energy(pts, m))));
    }
  }
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<ExactPoint> pts;
    for (int i = 0; i < 7; ++i) {
      pts.push_back(pt({testing::random_rational(rng, 1, 3), testing::random_rational(rng, 1, 3)}));
    }
    FiniteSet s(pts);
    for (int m = 1; m <= 2; ++m) {
      CHECK(additive_energy(s, m) == Integer(std::to_string(brute_energy_exact(s, m))));
    }
  }
}

TEST_CASE("wide coordinates take the arbitrary-precision path with the same counts") {
  const Integer big = Integer(1) << 61;
  std::vector<ExactPoint> wide, wide_frac;
  for (long k = 0; k <= 2; ++k) {
    wide.push_back(pt({Rational(big * k), 0}));
    wide_frac.push_back(pt({Rational(k, big + 1), 0}));
  }
  CHECK(additive_energy(FiniteSet(wide), 2) == 19);
  CHECK(additive_energy(FiniteSet(wide_frac), 2) == 19);
  CHECK(m_fold_sumset(FiniteSet(wide), 3).size() == 7);
  auto phi = representation_counts(FiniteSet(wide), 2);
  CHECK(phi.at(pt({Rational(big * 2), 0})) == 3);

  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    auto pts = random_integer_points(rng, 9, 4, 2);
    std::vector<ExactPoint> scaled;
    for (const auto& p : pts) scaled.push_back(pt({Rational(big * p[0]), Rational(big * p[1])}));
    FiniteSet small = FiniteSet::from_integers(pts);
    for (int m = 2; m <= 3; ++m) {
      CHECK(additive_energy(FiniteSet(scaled), m) == additive_energy(small, m));
      CHECK(m_fold_sumset(FiniteSet(scaled), m).size() == m_fold_sumset(small, m).size());
    }
  }
}

TEST_CASE("energy work cap") {
  WorkCaps tight;
  tight.energy = 100;
  CHECK_THROWS_AS(additive_energy(interval(1, 20), 3, tight), Error);
  CHECK(additive_energy(interval(1, 5), 2, tight) == 85);
}

TEST_CASE("energy lower bounds on random sets") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    auto pts = random_integer_points(rng, 14, 4, 2);
    FiniteSet a = FiniteSet::from_integers(pts);
    for (int m = 1; m <= 3; ++m) {
      Integer e = additive_energy(a, m);
      Integer size = static_cast<long>(a.size());
      CHECK(e >= pow(size, static_cast<unsigned>(m)));
      Integer ma = static_cast<long>(m_fold_sumset(a, m).size());
      CHECK(e * ma >= pow(size, static_cast<unsigned>(2 * m)));
    }
  }
}

TEST_CASE("translation invariance") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<ExactPoint> pts;
    for (int i = 0; i < 9; ++i) {
      pts.push_back(pt({testing::random_rational(rng, 3, 4), testing::random_rational(rng, 3, 4)}));
    }
    FiniteSet a(pts);
    ExactPoint t = pt({testing::random_rational(rng, 10, 7), testing::random_rational(rng, 10, 7)});
    FiniteSet b = a.translate(t);
    CHECK(additive_energy(a, 2) == additive_energy(b, 2));
    CHECK(additive_energy(a, 3) == additive_energy(b, 3));
    CHECK(doubling(a) == doubling(b));
  }
}

TEST_CASE("proper GAPs are separated with doubling at most 2^m") {
  std::mt19937_64 rng(8);
  int proper_seen = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const int m = static_cast<int>(testing::uniform_int(rng, 1, 3));
    Gap g;
    g.base = pt({testing::random_rational(rng, 2, 3), testing::random_rational(rng, 2, 3)});
    for (int i = 0; i < m; ++i) {
      g.generators.push_back(pt({testing::uniform_int(rng, -4, 4), testing::uniform_int(rng, -4, 4)}));
      g.lengths.push_back(static_cast<std::uint64_t>(testing::uniform_int(rng, 1, 4)));
    }
    if (!is_proper(g)) continue;
    ++proper_seen;
    FiniteSet e = gap_enumerate(g);
    if (e.size() >= 2) CHECK(min_separation(e).squared > 0);
    CHECK(doubling(e) <= pow(Rational(2), static_cast<unsigned>(m)));
  }
  CHECK(proper_seen > 10);
}

TEST_CASE("energy lower bound checker") {
  FiniteSet a = interval(1, 10);
  auto r = check_energy_lower_bound(a, a, 2);
  CHECK(r.doubling == ratio(19, 10));
  CHECK(r.energy == 670);
  CHECK(r.holds);
  CHECK(r.ratio > 1);

  auto single = check_energy_lower_bound(a, interval(4, 4), 3);
  CHECK(single.energy == 1);
  CHECK(single.holds);

  CHECK_THROWS_AS(check_energy_lower_bound(interval(1, 3), interval(2, 5), 2), Error);
  try {
    check_energy_lower_bound(interval(1, 3), interval(2, 5), 2);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kSubsetViolation);
  }

  std::mt19937_64 rng(100);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t size = static_cast<std::size_t>(testing::uniform_int(rng, 2, 30));
    auto pts = random_integer_points(rng, size, 6, 2);
    std::vector<std::vector<long>> sub;
    for (const auto& p : pts) {
      if (rng() % 2 == 0) sub.push_back(p);
    }
    if (sub.empty()) sub.push_back(pts.front());
    const int m = 2 + static_cast<int>(trial % 2);
    auto report = check_energy_lower_bound(FiniteSet::from_integers(pts),
                                           FiniteSet::from_integers(sub), m);
    CHECK(report.holds);
    CHECK(report.ratio >= 1);
  }
}

TEST_CASE("Plunnecke sanity") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    FiniteSet a = FiniteSet::from_integers(random_integer_points(rng, 12, 5, 2));
    for (int m = 1; m <= 4; ++m) {
      auto r = check_plunnecke(a, m);
      CHECK(r.holds);
      CHECK(r.ratio <= 1);
    }
  }
  auto ap = check_plunnecke(interval(1, 10), 3);
  CHECK(ap.size_ma == 28);
}
