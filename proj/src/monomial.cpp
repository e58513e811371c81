#include "curvelift/monomial.hpp"

#include <algorithm>

#include "curvelift/error.hpp"

namespace curvelift {

MonomialSet::MonomialSet(std::vector<Monomial> monomials) : monomials_(std::move(monomials)) {
  for (const auto& m : monomials_) {
    require(m.degree() >= 1, ErrorCode::kInvalidArgument, "monomials must have degree >= 1");
  }
  std::sort(monomials_.begin(), monomials_.end(), [](const Monomial& l, const Monomial& r) {
    if (l.degree() != r.degree()) return l.degree() < r.degree();
    return l.a > r.a;
  });
  require(std::adjacent_find(monomials_.begin(), monomials_.end()) == monomials_.end(),
          ErrorCode::kInvalidArgument, "monomials must be pairwise distinct");
}

std::vector<unsigned> MonomialSet::degrees() const {
  std::vector<unsigned> out;
  out.reserve(monomials_.size());
  for (const auto& m : monomials_) out.push_back(m.degree());
  return out;
}

unsigned MonomialSet::max_degree() const {
  unsigned d = 0;
  for (const auto& m : monomials_) d = std::max(d, m.degree());
  return d;
}

bool MonomialSet::contains_x() const {
  return std::find(monomials_.begin(), monomials_.end(), Monomial{1, 0}) != monomials_.end();
}

bool MonomialSet::contains_y() const {
  return std::find(monomials_.begin(), monomials_.end(), Monomial{0, 1}) != monomials_.end();
}

bool MonomialSet::has_coordinate_prefix() const {
  return monomials_.size() >= 2 && monomials_[0] == Monomial{1, 0} &&
         monomials_[1] == Monomial{0, 1};
}

}  // namespace curvelift
