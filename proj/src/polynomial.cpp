#include "curvelift/polynomial.hpp"

#include <algorithm>
#include <functional>

#include "curvelift/error.hpp"

namespace curvelift {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

Polynomial::Polynomial(const Rational& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

Polynomial Polynomial::monomial(unsigned power, const Rational& coefficient) {
  std::vector<Rational> c(power + 1);
  c[power] = coefficient;
  return Polynomial(std::move(c));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Rational(0);
}

Rational Polynomial::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

double Polynomial::evaluate(double t) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + it->get_d();
  return acc;
}

Polynomial Polynomial::derivative(unsigned order) const {
  if (static_cast<int>(order) > degree()) return {};
  std::vector<Rational> out(coeffs_.size() - order);
  for (std::size_t k = order; k < coeffs_.size(); ++k) {
    Integer falling = 1;
    for (unsigned j = 0; j < order; ++j) falling *= static_cast<unsigned long>(k - j);
    out[k - order] = coeffs_[k] * Rational(falling);
  }
  return Polynomial(std::move(out));
}

std::vector<Rational> Polynomial::taylor_at(const Rational& t, std::size_t count) const {
  // Synthetic division by (x - t), repeated; each pass yields the next
  // Taylor coefficient.
  std::vector<Rational> work = coeffs_;
  std::vector<Rational> out(count);
  for (std::size_t k = 0; k < count && !work.empty(); ++k) {
    for (std::size_t i = work.size() - 1; i > 0; --i) work[i - 1] += work[i] * t;
    out[k] = work.front();
    work.erase(work.begin());
  }
  return out;
}

Polynomial Polynomial::compose(const Polynomial& inner) const {
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + Polynomial(*it);
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial operator-(Polynomial a) { return a *= Rational(-1); }

Polynomial pow(const Polynomial& base, unsigned exponent) {
  Polynomial result(Rational(1));
  Polynomial square = base;
  while (exponent > 0) {
    if (exponent & 1u) result = result * square;
    exponent >>= 1;
    if (exponent > 0) square = square * square;
  }
  return result;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& dividend, const Polynomial& divisor) {
  require(!divisor.is_zero(), ErrorCode::kInvalidArgument, "polynomial division by zero");
  std::vector<Rational> rem = dividend.coefficients();
  const auto& d = divisor.coefficients();
  const int dd = divisor.degree();
  if (static_cast<int>(rem.size()) - 1 < dd) return {Polynomial(), dividend};
  std::vector<Rational> quot(rem.size() - d.size() + 1);
  for (int k = static_cast<int>(rem.size()) - 1; k >= dd; --k) {
    if (rem[k] == 0) continue;
    Rational factor = rem[k] / d.back();
    quot[k - dd] = factor;
    for (int j = 0; j <= dd; ++j) rem[k - dd + j] -= factor * d[j];
  }
  rem.resize(dd);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial exact_div(const Polynomial& dividend, const Polynomial& divisor) {
  auto [q, r] = divmod(dividend, divisor);
  require(r.is_zero(), ErrorCode::kInvalidArgument, "polynomial division is not exact");
  return q;
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * (Rational(1) / a.leading());
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.degree() <= 0) return p;
  return exact_div(p, gcd(p, p.derivative()));
}

int sign_variations(const std::vector<Rational>& coefficients) {
  int last = 0;
  int count = 0;
  for (const auto& c : coefficients) {
    int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

namespace {

// Coefficients of (1 + x)^d p((a + b x) / (1 + x)); its positive roots are in
// bijection with the roots of p in (a, b).
std::vector<Rational> mobius_transform(const Polynomial& p, const Rational& a, const Rational& b) {
  // q(x) = p(a + (b - a) x) maps (0, 1) onto (a, b).
  Polynomial scaled = p.compose(Polynomial({a, b - a}));
  std::vector<Rational> c = scaled.coefficients();
  const std::size_t d = p.coefficients().size();
  c.resize(d);
  // x^d q(1/x), then x -> x + 1.
  std::reverse(c.begin(), c.end());
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    for (std::size_t j = c.size() - 1; j > i; --j) c[j - 1] += c[j];
  }
  return c;
}

}  // namespace

std::vector<RootInterval> isolate_real_roots(const Polynomial& p, const Rational& lo,
                                             const Rational& hi, const Rational& width) {
  require(!p.is_zero(), ErrorCode::kInvalidArgument, "root isolation of the zero polynomial");
  require(lo <= hi, ErrorCode::kInvalidArgument, "empty isolation interval");
  std::vector<RootInterval> roots;
  if (p.degree() == 0) return roots;
  const Polynomial q = squarefree_part(p);

  auto exact_root = [&](const Rational& r) {
    roots.push_back({r, r, r.get_d()});
  };
  if (q(lo) == 0) exact_root(lo);
  if (lo == hi) return roots;

  std::function<void(const Rational&, const Rational&)> recurse = [&](const Rational& a,
                                                                      const Rational& b) {
    int v = sign_variations(mobius_transform(q, a, b));
    if (v == 0) return;
    int s_a = sgn(q(a));
    int s_b = sgn(q(b));
    if (v == 1 && s_a != 0 && s_b != 0) {
      Rational lo_r = a;
      Rational hi_r = b;
      while (hi_r - lo_r > width) {
        Rational mid = (lo_r + hi_r) / 2;
        int s_mid = sgn(q(mid));
        if (s_mid == 0) {
          lo_r = hi_r = mid;
          break;
        }
        if (s_mid == s_a) {
          lo_r = mid;
        } else {
          hi_r = mid;
        }
      }
      roots.push_back({lo_r, hi_r, Rational((lo_r + hi_r) / 2).get_d()});
      return;
    }
    Rational mid = (a + b) / 2;
    recurse(a, mid);
    if (q(mid) == 0) exact_root(mid);
    recurse(mid, b);
  };
  recurse(lo, hi);
  if (q(hi) == 0) exact_root(hi);
  return roots;
}

}  // namespace curvelift
