#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "curvelift/rational.hpp"

namespace curvelift {

// A point with exact rational coordinates (always canonical).
struct ExactPoint {
  std::vector<Rational> coords;

  std::size_t dimension() const { return coords.size(); }
  const Rational& operator[](std::size_t i) const { return coords[i]; }

  friend bool operator==(const ExactPoint& a, const ExactPoint& b) { return a.coords == b.coords; }
  friend bool operator<(const ExactPoint& a, const ExactPoint& b) {
    return std::lexicographical_compare(a.coords.begin(), a.coords.end(), b.coords.begin(),
                                        b.coords.end());
  }
};

ExactPoint operator+(const ExactPoint& a, const ExactPoint& b);
Rational squared_distance(const ExactPoint& a, const ExactPoint& b);

// Deduplicated finite point collection of common dimension, stored sorted.
class FiniteSet {
 public:
  FiniteSet() = default;
  explicit FiniteSet(std::vector<ExactPoint> points);
  static FiniteSet from_integers(const std::vector<std::vector<long>>& points);

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  std::size_t dimension() const { return points_.empty() ? 0 : points_.front().dimension(); }
  const std::vector<ExactPoint>& points() const { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  bool contains(const ExactPoint& p) const;
  bool is_subset_of(const FiniteSet& other) const;
  FiniteSet translate(const ExactPoint& offset) const;

  friend bool operator==(const FiniteSet& a, const FiniteSet& b) { return a.points_ == b.points_; }

 private:
  std::vector<ExactPoint> points_;
};

// {v + Σ ℓ_i v_i : 1 <= ℓ_i <= N_i}.
struct Gap {
  ExactPoint base;
  std::vector<ExactPoint> generators;
  std::vector<std::uint64_t> lengths;

  std::size_t gap_dimension() const { return generators.size(); }
  // ∏ N_i, saturating at UINT64_MAX.
  std::uint64_t nominal_size() const;
  void validate() const;
};

struct WorkCaps {
  std::uint64_t enumeration = 10'000'000;
  std::uint64_t energy = 100'000'000;
};

FiniteSet gap_enumerate(const Gap& gap, const WorkCaps& caps = {});
bool is_proper(const Gap& gap, const WorkCaps& caps = {});

struct Separation {
  Rational squared;
  double distance = 0.0;
};

// Minimum pairwise Euclidean distance, decided on exact squared distances.
Separation min_separation(const FiniteSet& set);

FiniteSet sumset(const FiniteSet& a, const FiniteSet& b, const WorkCaps& caps = {});
// |A + A| / |A|.
Rational doubling(const FiniteSet& set, const WorkCaps& caps = {});

// mA, built as ((A + A) + A)... with deduplication at every step.
FiniteSet m_fold_sumset(const FiniteSet& set, int m, const WorkCaps& caps = {});

// φ(b) = #{(a_1..a_m) in A^m : a_1 + ... + a_m = b}, built by m - 1
// multiplicity-preserving convolution steps. Keys are points of mA.
std::map<ExactPoint, Integer> representation_counts(const FiniteSet& set, int m,
                                                    const WorkCaps& caps = {});

// E_m(A): ordered 2m-tuples with a_1 + ... + a_m = a_{m+1} + ... + a_{2m},
// computed as Σ φ(b)^2.
Integer additive_energy(const FiniteSet& set, int m, const WorkCaps& caps = {});

struct EnergyBoundReport {
  Integer energy;           // E_m(B)
  Rational doubling;        // K of A
  std::size_t size_a = 0;
  std::size_t size_b = 0;
  int m = 0;
  // E_m(B) K^m |A| / |B|^(2m); the bound holds iff ratio >= 1.
  Rational ratio;
  bool holds = false;
};

// E_m(B) >= |B|^(2m) / (K^m |A|) for B ⊆ A.
EnergyBoundReport check_energy_lower_bound(const FiniteSet& a, const FiniteSet& b, int m,
                                           const WorkCaps& caps = {});

struct PlunneckeReport {
  std::size_t size_a = 0;
  std::size_t size_ma = 0;
  Rational doubling;
  int m = 0;
  // |mA| / (K^m |A|); holds iff <= 1.
  Rational ratio;
  bool holds = false;
};

PlunneckeReport check_plunnecke(const FiniteSet& a, int m, const WorkCaps& caps = {});

}  // namespace curvelift
