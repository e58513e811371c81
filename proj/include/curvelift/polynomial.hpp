#pragma once

#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "curvelift/rational.hpp"

namespace curvelift {

// Dense univariate polynomial over the rationals, coefficients in ascending
// powers. The zero polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients)
      : Polynomial(std::vector<Rational>(coefficients)) {}
  Polynomial(const Rational& constant);  // NOLINT: implicit constant promotion

  static Polynomial monomial(unsigned power, const Rational& coefficient = 1);
  // The polynomial t.
  static Polynomial identity() { return monomial(1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t power) const;
  const Rational& leading() const { return coeffs_.back(); }

  Rational operator()(const Rational& t) const;
  double evaluate(double t) const;

  Polynomial derivative(unsigned order = 1) const;
  // Coefficients of p(t + h) in powers of h, truncated to `count` terms;
  // entry k equals p^(k)(t) / k!.
  std::vector<Rational> taylor_at(const Rational& t, std::size_t count) const;
  // p(q(t)).
  Polynomial compose(const Polynomial& inner) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(Polynomial a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

Polynomial pow(const Polynomial& base, unsigned exponent);

// Euclidean division; throws on a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& dividend, const Polynomial& divisor);
// Division known to be exact (used by fraction-free elimination).
Polynomial exact_div(const Polynomial& dividend, const Polynomial& divisor);
// Monic greatest common divisor.
Polynomial gcd(Polynomial a, Polynomial b);
Polynomial squarefree_part(const Polynomial& p);

// A real root known to lie in [lo, hi]; lo == hi when the root is exact.
struct RootInterval {
  Rational lo;
  Rational hi;
  double approx = 0.0;
  bool exact() const { return lo == hi; }
};

// Isolates the distinct real roots of a nonzero polynomial in the closed
// interval [lo, hi] (Descartes sign-variation bisection on the square-free
// part). Intervals are disjoint, sorted, and refined until their width is
// below `width`.
std::vector<RootInterval> isolate_real_roots(const Polynomial& p, const Rational& lo,
                                             const Rational& hi,
                                             const Rational& width = Rational(1, 1ul << 52));

// Sign variations of the coefficient sequence, zeros skipped.
int sign_variations(const std::vector<Rational>& coefficients);

}  // namespace curvelift
