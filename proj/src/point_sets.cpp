#include "curvelift/point_sets.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "curvelift/error.hpp"

namespace curvelift {

ExactPoint operator+(const ExactPoint& a, const ExactPoint& b) {
  require(a.dimension() == b.dimension(), ErrorCode::kInvalidDimension, "dimension mismatch");
  ExactPoint out;
  out.coords.reserve(a.dimension());
  for (std::size_t i = 0; i < a.dimension(); ++i) out.coords.push_back(a.coords[i] + b.coords[i]);
  return out;
}

Rational squared_distance(const ExactPoint& a, const ExactPoint& b) {
  require(a.dimension() == b.dimension(), ErrorCode::kInvalidDimension, "dimension mismatch");
  Rational acc = 0;
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    Rational d = a.coords[i] - b.coords[i];
    acc += d * d;
  }
  return acc;
}

FiniteSet::FiniteSet(std::vector<ExactPoint> points) : points_(std::move(points)) {
  for (auto& p : points_) {
    require(p.dimension() == points_.front().dimension(), ErrorCode::kInvalidDimension,
            "points of a set must share a dimension");
    for (auto& c : p.coords) c.canonicalize();
  }
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

FiniteSet FiniteSet::from_integers(const std::vector<std::vector<long>>& points) {
  std::vector<ExactPoint> out;
  for (const auto& p : points) {
    ExactPoint e;
    for (long v : p) e.coords.emplace_back(v);
    out.push_back(std::move(e));
  }
  return FiniteSet(std::move(out));
}

bool FiniteSet::contains(const ExactPoint& p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

bool FiniteSet::is_subset_of(const FiniteSet& other) const {
  return std::includes(other.points_.begin(), other.points_.end(), points_.begin(), points_.end());
}

FiniteSet FiniteSet::translate(const ExactPoint& offset) const {
  std::vector<ExactPoint> out;
  out.reserve(points_.size());
  for (const auto& p : points_) out.push_back(p + offset);
  return FiniteSet(std::move(out));
}

std::uint64_t Gap::nominal_size() const {
  std::uint64_t total = 1;
  for (auto n : lengths) {
    if (n != 0 && total > std::numeric_limits<std::uint64_t>::max() / n) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    total *= n;
  }
  return total;
}

void Gap::validate() const {
  require(generators.size() == lengths.size(), ErrorCode::kInvalidArgument,
          "GAP needs one length per generator");
  for (const auto& g : generators) {
    require(g.dimension() == base.dimension(), ErrorCode::kInvalidDimension,
            "GAP generators must share the base dimension");
  }
  for (auto n : lengths) require(n >= 1, ErrorCode::kInvalidArgument, "GAP lengths must be >= 1");
}

FiniteSet gap_enumerate(const Gap& gap, const WorkCaps& caps) {
  gap.validate();
  const std::uint64_t total = gap.nominal_size();
  require(total <= caps.enumeration, ErrorCode::kCapExceeded,
          "GAP has " + std::to_string(total) + " nominal points, above the enumeration cap");
  const std::size_t m = gap.gap_dimension();
  std::vector<std::uint64_t> ell(m, 1);
  std::vector<ExactPoint> points;
  points.reserve(total);
  for (std::uint64_t count = 0; count < total; ++count) {
    ExactPoint p = gap.base;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t d = 0; d < p.dimension(); ++d) {
        p.coords[d] += gap.generators[i].coords[d] * Rational(Integer(std::to_string(ell[i])));
      }
    }
    points.push_back(std::move(p));
    for (std::size_t i = 0; i < m; ++i) {
      if (++ell[i] <= gap.lengths[i]) break;
      ell[i] = 1;
    }
  }
  return FiniteSet(std::move(points));
}

bool is_proper(const Gap& gap, const WorkCaps& caps) {
  return gap_enumerate(gap, caps).size() == gap.nominal_size();
}

Separation min_separation(const FiniteSet& set) {
  require(set.size() >= 2, ErrorCode::kUndefined, "minimal separation needs at least two points");
  const auto& pts = set.points();
  Rational best = squared_distance(pts[0], pts[1]);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      Rational d = squared_distance(pts[i], pts[j]);
      if (d < best) best = d;
    }
  }
  Separation s{best, std::sqrt(best.get_d())};
  // Exact square root when the squared distance is a rational square.
  if (mpz_perfect_square_p(best.get_num_mpz_t()) && mpz_perfect_square_p(best.get_den_mpz_t())) {
    Rational root;
    mpz_sqrt(root.get_num_mpz_t(), best.get_num_mpz_t());
    mpz_sqrt(root.get_den_mpz_t(), best.get_den_mpz_t());
    s.distance = root.get_d();
  }
  return s;
}

FiniteSet sumset(const FiniteSet& a, const FiniteSet& b, const WorkCaps& caps) {
  require(a.dimension() == b.dimension() || a.empty() || b.empty(), ErrorCode::kInvalidDimension,
          "sumset of sets with different dimensions");
  require(static_cast<double>(a.size()) * static_cast<double>(b.size()) <=
              static_cast<double>(caps.enumeration),
          ErrorCode::kCapExceeded, "sumset work exceeds the enumeration cap");
  std::vector<ExactPoint> out;
  out.reserve(a.size() * b.size());
  for (const auto& p : a) {
    for (const auto& q : b) out.push_back(p + q);
  }
  return FiniteSet(std::move(out));
}

namespace {

// Integer coordinates of a set after multiplying by the common denominator.
// Additive structure (sums, energies, sumset sizes) is invariant under this
// injective linear map, and integer keys compare exactly.
struct ScaledSet {
  Integer scale = 1;
  std::vector<std::vector<Integer>> points;
  Integer max_abs = 0;
};

ScaledSet scale_to_integers(const FiniteSet& set) {
  ScaledSet s;
  for (const auto& p : set) {
    for (const auto& c : p.coords) mpz_lcm(s.scale.get_mpz_t(), s.scale.get_mpz_t(), c.get_den_mpz_t());
  }
  for (const auto& p : set) {
    std::vector<Integer> v;
    for (const auto& c : p.coords) {
      v.push_back(c.get_num() * (s.scale / c.get_den()));
      if (abs(v.back()) > s.max_abs) s.max_abs = abs(v.back());
    }
    s.points.push_back(std::move(v));
  }
  return s;
}

bool fits_int64(const ScaledSet& s, int m) {
  return s.max_abs * m < Integer(1) << 62;
}

std::vector<std::vector<std::int64_t>> to_int64(const ScaledSet& s) {
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& p : s.points) {
    std::vector<std::int64_t> v;
    for (const auto& c : p) v.push_back(c.get_si());
    out.push_back(std::move(v));
  }
  return out;
}

struct VectorHash {
  std::size_t operator()(const std::vector<std::int64_t>& v) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (auto x : v) {
      h ^= std::hash<std::int64_t>{}(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

template <class K, class V>
struct MapFor {
  using type = std::map<std::vector<K>, V>;
};
template <class V>
struct MapFor<std::int64_t, V> {
  using type = std::unordered_map<std::vector<std::int64_t>, V, VectorHash>;
};

template <class K>
struct SetFor {
  using type = std::set<std::vector<K>>;
};
template <>
struct SetFor<std::int64_t> {
  using type = std::unordered_set<std::vector<std::int64_t>, VectorHash>;
};

template <class K>
std::vector<K> add(const std::vector<K>& a, const std::vector<K>& b) {
  std::vector<K> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

ExactPoint unscale(const std::vector<Integer>& v, const Integer& scale) {
  ExactPoint p;
  for (const auto& c : v) {
    Rational r(c, scale);
    r.canonicalize();
    p.coords.push_back(std::move(r));
  }
  return p;
}

ExactPoint unscale(const std::vector<std::int64_t>& v, const Integer& scale) {
  ExactPoint p;
  for (auto c : v) {
    Rational r(Integer(std::to_string(c)), scale);
    r.canonicalize();
    p.coords.push_back(std::move(r));
  }
  return p;
}

void charge(std::uint64_t& work, std::uint64_t amount, std::uint64_t cap, const char* what) {
  work += amount;
  require(work <= cap, ErrorCode::kCapExceeded, std::string(what) + " exceeds the work cap");
}

// Multiplicity-preserving convolution: φ_1 = 1_A, φ_{k+1}(s + a) += φ_k(s).
template <class K, class Count>
typename MapFor<K, Count>::type convolve(const std::vector<std::vector<K>>& pts, int m,
                                         std::uint64_t cap) {
  typename MapFor<K, Count>::type phi;
  for (const auto& p : pts) phi[p] = Count(1);
  std::uint64_t work = 0;
  for (int step = 1; step < m; ++step) {
    charge(work, static_cast<std::uint64_t>(phi.size()) * pts.size(), cap, "additive energy");
    typename MapFor<K, Count>::type next;
    for (const auto& [sum, count] : phi) {
      for (const auto& p : pts) next[add(sum, p)] += count;
    }
    phi = std::move(next);
  }
  return phi;
}

template <class K>
typename SetFor<K>::type iterated_sumset(const std::vector<std::vector<K>>& pts, int m,
                                         std::uint64_t cap) {
  typename SetFor<K>::type current(pts.begin(), pts.end());
  std::uint64_t work = 0;
  for (int step = 1; step < m; ++step) {
    charge(work, static_cast<std::uint64_t>(current.size()) * pts.size(), cap, "m-fold sumset");
    typename SetFor<K>::type next;
    for (const auto& s : current) {
      for (const auto& p : pts) next.insert(add(s, p));
    }
    current = std::move(next);
  }
  return current;
}

// |A|^m fits comfortably in 63 bits.
bool counts_fit_uint64(std::size_t n, int m) {
  return static_cast<double>(m) * std::log2(static_cast<double>(std::max<std::size_t>(n, 2))) < 62.0;
}

template <class Map>
Integer sum_of_squares(const Map& phi) {
  Integer total = 0;
  for (const auto& [key, count] : phi) {
    Integer c;
    if constexpr (std::is_same_v<std::decay_t<decltype(count)>, Integer>) {
      c = count;
    } else {
      c = Integer(std::to_string(count));
    }
    total += c * c;
  }
  return total;
}

}  // namespace

FiniteSet m_fold_sumset(const FiniteSet& set, int m, const WorkCaps& caps) {
  require(m >= 1, ErrorCode::kInvalidArgument, "m must be >= 1");
  require(!set.empty(), ErrorCode::kUndefined, "m-fold sumset of an empty set");
  const ScaledSet scaled = scale_to_integers(set);
  std::vector<ExactPoint> out;
  if (fits_int64(scaled, m)) {
    for (const auto& v : iterated_sumset(to_int64(scaled), m, caps.enumeration)) {
      out.push_back(unscale(v, scaled.scale));
    }
  } else {
    for (const auto& v : iterated_sumset(scaled.points, m, caps.enumeration)) {
      out.push_back(unscale(v, scaled.scale));
    }
  }
  return FiniteSet(std::move(out));
}

namespace {

// |mA| without materializing rational points.
std::size_t m_fold_size(const FiniteSet& set, int m, const WorkCaps& caps) {
  require(m >= 1, ErrorCode::kInvalidArgument, "m must be >= 1");
  const ScaledSet scaled = scale_to_integers(set);
  if (fits_int64(scaled, m)) return iterated_sumset(to_int64(scaled), m, caps.enumeration).size();
  return iterated_sumset(scaled.points, m, caps.enumeration).size();
}

}  // namespace

Rational doubling(const FiniteSet& set, const WorkCaps& caps) {
  require(!set.empty(), ErrorCode::kUndefined, "doubling constant of an empty set");
  return ratio(static_cast<long>(m_fold_size(set, 2, caps)), set.size());
}

std::map<ExactPoint, Integer> representation_counts(const FiniteSet& set, int m,
                                                    const WorkCaps& caps) {
  require(m >= 1, ErrorCode::kInvalidArgument, "m must be >= 1");
  require(!set.empty(), ErrorCode::kUndefined, "representation counts of an empty set");
  const ScaledSet scaled = scale_to_integers(set);
  std::map<ExactPoint, Integer> out;
  auto emit = [&](const auto& phi) {
    for (const auto& [key, count] : phi) {
      if constexpr (std::is_same_v<std::decay_t<decltype(count)>, Integer>) {
        out.emplace(unscale(key, scaled.scale), count);
      } else {
        out.emplace(unscale(key, scaled.scale), Integer(std::to_string(count)));
      }
    }
  };
  if (fits_int64(scaled, m)) {
    emit(convolve<std::int64_t, std::uint64_t>(to_int64(scaled), m, caps.energy));
  } else {
    emit(convolve<Integer, Integer>(scaled.points, m, caps.energy));
  }
  return out;
}

Integer additive_energy(const FiniteSet& set, int m, const WorkCaps& caps) {
  require(m >= 1, ErrorCode::kInvalidArgument, "m must be >= 1");
  require(!set.empty(), ErrorCode::kUndefined, "additive energy of an empty set");
  const ScaledSet scaled = scale_to_integers(set);
  if (fits_int64(scaled, m)) {
    const auto pts = to_int64(scaled);
    if (counts_fit_uint64(set.size(), m)) {
      return sum_of_squares(convolve<std::int64_t, std::uint64_t>(pts, m, caps.energy));
    }
    return sum_of_squares(convolve<std::int64_t, Integer>(pts, m, caps.energy));
  }
  return sum_of_squares(convolve<Integer, Integer>(scaled.points, m, caps.energy));
}

EnergyBoundReport check_energy_lower_bound(const FiniteSet& a, const FiniteSet& b, int m,
                                           const WorkCaps& caps) {
  require(!b.empty(), ErrorCode::kUndefined, "energy bound needs a nonempty subset");
  require(b.is_subset_of(a), ErrorCode::kSubsetViolation, "B is not a subset of A");
  EnergyBoundReport r;
  r.m = m;
  r.size_a = a.size();
  r.size_b = b.size();
  r.energy = additive_energy(b, m, caps);
  r.doubling = doubling(a, caps);
  const Rational lhs = Rational(r.energy) * pow(r.doubling, static_cast<unsigned>(m)) *
                       Rational(static_cast<long>(a.size()));
  const Rational b_pow = pow(Rational(static_cast<long>(b.size())), static_cast<unsigned>(2 * m));
  r.ratio = lhs / b_pow;
  r.holds = r.ratio >= 1;
  return r;
}

PlunneckeReport check_plunnecke(const FiniteSet& a, int m, const WorkCaps& caps) {
  PlunneckeReport r;
  r.m = m;
  r.size_a = a.size();
  r.size_ma = m_fold_size(a, m, caps);
  r.doubling = doubling(a, caps);
  r.ratio = Rational(static_cast<long>(r.size_ma)) /
            (pow(r.doubling, static_cast<unsigned>(m)) * Rational(static_cast<long>(a.size())));
  r.holds = r.ratio <= 1;
  return r;
}

}  // namespace curvelift
