#pragma once

#include <compare>
#include <vector>

namespace curvelift {

// x^a y^b with a + b >= 1.
struct Monomial {
  unsigned a = 0;
  unsigned b = 0;

  unsigned degree() const { return a + b; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Ordered set of distinct bivariate monomials. Construction canonicalizes the
// order: by total degree, and within a degree by descending power of x, so
// x and y (when present) always come first.
class MonomialSet {
 public:
  MonomialSet() = default;
  explicit MonomialSet(std::vector<Monomial> monomials);

  std::size_t size() const { return monomials_.size(); }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  const Monomial& operator[](std::size_t i) const { return monomials_[i]; }
  std::vector<unsigned> degrees() const;
  unsigned max_degree() const;

  bool contains_x() const;
  bool contains_y() const;
  // m_1 = x and m_2 = y.
  bool has_coordinate_prefix() const;

  friend bool operator==(const MonomialSet&, const MonomialSet&) = default;

 private:
  std::vector<Monomial> monomials_;
};

}  // namespace curvelift
