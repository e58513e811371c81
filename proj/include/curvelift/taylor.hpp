#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cstddef>
#include <vector>

namespace curvelift {

// Scalar for floating jets of transcendental curves. Wronskians of lifted
// curves are determinants of rows scaled like (2πk)^i, so double rounding
// would swamp the values being tested.
using HighFloat = boost::multiprecision::cpp_bin_float_50;

// Truncated power series sum_k c[k] h^k around a fixed parameter value.
// c[k] is the k-th derivative divided by k!.
template <class T>
class TaylorSeries {
 public:
  TaylorSeries() = default;
  explicit TaylorSeries(std::size_t terms) : c_(terms, T(0)) {}
  TaylorSeries(std::vector<T> coefficients) : c_(std::move(coefficients)) {}  // NOLINT

  static TaylorSeries constant(const T& value, std::size_t terms) {
    TaylorSeries s(terms);
    if (terms > 0) s.c_[0] = value;
    return s;
  }

  std::size_t terms() const { return c_.size(); }
  const T& operator[](std::size_t k) const { return c_[k]; }
  T& operator[](std::size_t k) { return c_[k]; }
  const std::vector<T>& coefficients() const { return c_; }

  TaylorSeries operator*(const TaylorSeries& other) const {
    const std::size_t n = std::min(terms(), other.terms());
    TaylorSeries out(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (c_[i] == 0) continue;
      for (std::size_t j = 0; i + j < n; ++j) out.c_[i + j] += c_[i] * other.c_[j];
    }
    return out;
  }

  // Requires other[0] != 0.
  TaylorSeries operator/(const TaylorSeries& other) const {
    const std::size_t n = std::min(terms(), other.terms());
    TaylorSeries out(n);
    for (std::size_t k = 0; k < n; ++k) {
      T acc = c_[k];
      for (std::size_t j = 1; j <= k; ++j) acc -= other.c_[j] * out.c_[k - j];
      out.c_[k] = acc / other.c_[0];
    }
    return out;
  }

  // k-th derivative at the expansion point.
  T derivative(std::size_t k) const {
    T f = c_[k];
    for (std::size_t j = 2; j <= k; ++j) f *= T(static_cast<long>(j));
    return f;
  }

 private:
  std::vector<T> c_;
};

template <class T>
TaylorSeries<T> pow(const TaylorSeries<T>& base, unsigned exponent) {
  auto result = TaylorSeries<T>::constant(T(1), base.terms());
  for (unsigned i = 0; i < exponent; ++i) result = result * base;
  return result;
}

}  // namespace curvelift
