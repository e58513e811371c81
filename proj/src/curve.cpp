#include "curvelift/curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/constants/constants.hpp>

#include "curvelift/error.hpp"

namespace curvelift {

namespace {

const HighFloat& high_pi() {
  static const HighFloat pi = boost::math::constants::pi<HighFloat>();
  return pi;
}

HighFloat to_high(const Rational& r) {
  return HighFloat(r.get_num().get_str()) / HighFloat(r.get_den().get_str());
}

double high_epsilon() { return std::numeric_limits<HighFloat>::epsilon().convert_to<double>(); }

template <class T>
TaylorSeries<T> polynomial_taylor(const std::vector<T>& coeffs, const T& t, std::size_t terms) {
  std::vector<T> work = coeffs;
  TaylorSeries<T> out(terms);
  for (std::size_t k = 0; k < terms && !work.empty(); ++k) {
    for (std::size_t i = work.size() - 1; i > 0; --i) work[i - 1] += work[i] * t;
    out[k] = work.front();
    work.erase(work.begin());
  }
  return out;
}

template <class T>
TaylorSeries<T> monomial_of(const TaylorSeries<T>& x, const TaylorSeries<T>& y, const Monomial& m) {
  return pow(x, m.a) * pow(y, m.b);
}

double horner(const std::vector<double>& c, double t) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
  return acc;
}

}  // namespace

std::string to_string(CurveKind kind) {
  switch (kind) {
    case CurveKind::kMoment: return "moment";
    case CurveKind::kPolynomialParametric: return "polynomial-parametric";
    case CurveKind::kPolynomialGraph: return "polynomial-graph";
    case CurveKind::kCircleArc: return "circle-arc";
    case CurveKind::kRationalParametric: return "rational-parametric";
    case CurveKind::kLifted: return "lifted";
  }
  return "unknown";
}

CurveKind parse_curve_kind(const std::string& name) {
  for (auto kind : {CurveKind::kMoment, CurveKind::kPolynomialParametric,
                    CurveKind::kPolynomialGraph, CurveKind::kCircleArc,
                    CurveKind::kRationalParametric, CurveKind::kLifted}) {
    if (to_string(kind) == name) return kind;
  }
  fail(ErrorCode::kParse, "unknown curve kind '" + name + "'");
}

std::string to_string(CertificateStatus status) {
  switch (status) {
    case CertificateStatus::kCertified: return "certified";
    case CertificateStatus::kSampledOnly: return "sampled-only";
    case CertificateStatus::kFailed: return "failed";
  }
  return "unknown";
}

CurveSpec CurveSpec::polynomial(CurveKind kind, std::vector<Polynomial> coordinates,
                                Rational t_lo, Rational t_hi, int smoothness_order) {
  CurveSpec c;
  c.kind_ = kind;
  c.rep_ = Rep::kPolynomial;
  c.dimension_ = static_cast<int>(coordinates.size());
  c.numerators_ = std::move(coordinates);
  c.t_lo_ = std::move(t_lo);
  c.t_hi_ = std::move(t_hi);
  c.smoothness_order_ = smoothness_order;
  c.validate();
  c.cache_doubles();
  return c;
}

CurveSpec CurveSpec::rational(std::vector<Polynomial> numerators,
                              std::vector<Polynomial> denominators, Rational t_lo, Rational t_hi,
                              int smoothness_order, CurveKind kind) {
  require(numerators.size() == denominators.size(), ErrorCode::kInvalidArgument,
          "numerator and denominator counts differ");
  CurveSpec c;
  c.kind_ = kind;
  c.rep_ = Rep::kRational;
  c.dimension_ = static_cast<int>(numerators.size());
  c.numerators_ = std::move(numerators);
  c.denominators_ = std::move(denominators);
  c.t_lo_ = std::move(t_lo);
  c.t_hi_ = std::move(t_hi);
  c.smoothness_order_ = smoothness_order;
  c.validate();
  for (const auto& q : c.denominators_) {
    require(!q.is_zero() && isolate_real_roots(q, c.t_lo_, c.t_hi_, Rational(1)).empty(),
            ErrorCode::kInvalidArgument, "denominator vanishes on the parameter domain");
  }
  c.cache_doubles();
  return c;
}

CurveSpec CurveSpec::circle_arc(Rational t_lo, Rational t_hi, int smoothness_order) {
  CurveSpec c;
  c.kind_ = CurveKind::kCircleArc;
  c.rep_ = Rep::kCircle;
  c.dimension_ = 2;
  c.t_lo_ = std::move(t_lo);
  c.t_hi_ = std::move(t_hi);
  c.smoothness_order_ = smoothness_order;
  c.validate();
  return c;
}

CurveSpec CurveSpec::lifted_floating(const CurveSpec& base, const MonomialSet& monomials) {
  require(base.dimension() == 2, ErrorCode::kInvalidDimension, "lifts need a planar base curve");
  CurveSpec c;
  c.kind_ = CurveKind::kLifted;
  c.rep_ = Rep::kLiftedFloating;
  c.dimension_ = static_cast<int>(monomials.size());
  c.t_lo_ = base.t_lo();
  c.t_hi_ = base.t_hi();
  c.smoothness_order_ = base.smoothness_order();
  c.base_ = std::make_shared<const CurveSpec>(base);
  c.monomials_ = monomials;
  c.validate();
  return c;
}

void CurveSpec::validate() const {
  require(dimension_ >= 1, ErrorCode::kInvalidDimension, "curve dimension must be positive");
  require(t_lo_ < t_hi_, ErrorCode::kDomain, "parameter domain must satisfy t_lo < t_hi");
  require(t_lo_ >= 0 && t_hi_ <= 1, ErrorCode::kDomain, "parameter domain must lie in [0, 1]");
  require(smoothness_order_ >= dimension_, ErrorCode::kUnsupportedOrder,
          "smoothness order must be at least the dimension");
}

void CurveSpec::cache_doubles() {
  auto cache = [](const std::vector<Polynomial>& polys) {
    std::vector<std::array<std::vector<double>, 3>> out(polys.size());
    for (std::size_t i = 0; i < polys.size(); ++i) {
      for (unsigned k = 0; k < 3; ++k) {
        const Polynomial d = polys[i].derivative(k);
        for (const auto& c : d.coefficients()) out[i][k].push_back(c.get_d());
      }
    }
    return out;
  };
  num_d_ = cache(numerators_);
  den_d_ = cache(denominators_);
}

bool CurveSpec::is_graph_form() const {
  if (rep_ == Rep::kPolynomial) return numerators_[0] == Polynomial::identity();
  if (rep_ == Rep::kRational) {
    return numerators_[0] == Polynomial::identity() * denominators_[0];
  }
  return false;
}

void CurveSpec::evaluate(double t, int order, std::span<double> out) const {
  const auto n = static_cast<std::size_t>(dimension_);
  switch (rep_) {
    case Rep::kPolynomial:
      for (std::size_t i = 0; i < n; ++i) {
        for (int k = 0; k <= order; ++k) out[k * n + i] = horner(num_d_[i][k], t);
      }
      return;
    case Rep::kRational:
      for (std::size_t i = 0; i < n; ++i) {
        double p[3] = {0, 0, 0};
        double q[3] = {0, 0, 0};
        for (int k = 0; k <= order; ++k) {
          p[k] = horner(num_d_[i][k], t);
          q[k] = horner(den_d_[i][k], t);
        }
        const double f = p[0] / q[0];
        out[i] = f;
        if (order >= 1) {
          const double f1 = (p[1] - f * q[1]) / q[0];
          out[n + i] = f1;
          if (order >= 2) out[2 * n + i] = (p[2] - 2.0 * f1 * q[1] - f * q[2]) / q[0];
        }
      }
      return;
    case Rep::kCircle: {
      constexpr double w = 2.0 * std::numbers::pi;
      const double c = std::cos(w * t);
      const double s = std::sin(w * t);
      out[0] = c;
      out[1] = s;
      if (order >= 1) {
        out[2] = -w * s;
        out[3] = w * c;
      }
      if (order >= 2) {
        out[4] = -w * w * c;
        out[5] = -w * w * s;
      }
      return;
    }
    case Rep::kLiftedFloating: {
      double b[6] = {0, 0, 0, 0, 0, 0};
      base_->evaluate(t, order, std::span<double>(b, static_cast<std::size_t>(2 * (order + 1))));
      // Taylor coefficients of the base, then products truncated at order 2.
      TaylorSeries<double> x(std::vector<double>{b[0], order >= 1 ? b[2] : 0.0,
                                                 order >= 2 ? b[4] / 2 : 0.0});
      TaylorSeries<double> y(std::vector<double>{b[1], order >= 1 ? b[3] : 0.0,
                                                 order >= 2 ? b[5] / 2 : 0.0});
      for (std::size_t i = 0; i < n; ++i) {
        auto m = monomial_of(x, y, monomials_[i]);
        for (int k = 0; k <= order; ++k) out[k * n + i] = m.derivative(static_cast<std::size_t>(k));
      }
      return;
    }
  }
}

std::vector<TaylorSeries<Rational>> CurveSpec::exact_taylor(const Rational& t,
                                                             std::size_t terms) const {
  require(is_exact(), ErrorCode::kInvalidArgument, "exact jets need an exact curve");
  std::vector<TaylorSeries<Rational>> out;
  out.reserve(numerators_.size());
  for (std::size_t i = 0; i < numerators_.size(); ++i) {
    TaylorSeries<Rational> num(numerators_[i].taylor_at(t, terms));
    if (rep_ == Rep::kRational) {
      out.push_back(num / TaylorSeries<Rational>(denominators_[i].taylor_at(t, terms)));
    } else {
      out.push_back(std::move(num));
    }
  }
  return out;
}

std::vector<TaylorSeries<HighFloat>> CurveSpec::floating_taylor(const HighFloat& t,
                                                                std::size_t terms) const {
  std::vector<TaylorSeries<HighFloat>> out;
  auto to_high_coeffs = [](const Polynomial& p) {
    std::vector<HighFloat> c;
    for (const auto& r : p.coefficients()) c.push_back(to_high(r));
    return c;
  };
  switch (rep_) {
    case Rep::kPolynomial:
      for (const auto& p : numerators_) out.push_back(polynomial_taylor(to_high_coeffs(p), t, terms));
      break;
    case Rep::kRational:
      for (std::size_t i = 0; i < numerators_.size(); ++i) {
        out.push_back(polynomial_taylor(to_high_coeffs(numerators_[i]), t, terms) /
                      polynomial_taylor(to_high_coeffs(denominators_[i]), t, terms));
      }
      break;
    case Rep::kCircle: {
      // d^k/dt^k cos(ωt) = ω^k cos(ωt + kπ/2), likewise for sin.
      const HighFloat omega = 2 * high_pi();
      const HighFloat theta = omega * t;
      TaylorSeries<HighFloat> x(terms);
      TaylorSeries<HighFloat> y(terms);
      HighFloat scale = 1;
      for (std::size_t k = 0; k < terms; ++k) {
        const HighFloat phase = theta + HighFloat(static_cast<long>(k)) * high_pi() / 2;
        x[k] = scale * cos(phase);
        y[k] = scale * sin(phase);
        scale = scale * omega / HighFloat(static_cast<long>(k + 1));
      }
      out.push_back(std::move(x));
      out.push_back(std::move(y));
      break;
    }
    case Rep::kLiftedFloating: {
      auto b = base_->floating_taylor(t, terms);
      for (const auto& m : monomials_.monomials()) out.push_back(monomial_of(b[0], b[1], m));
      break;
    }
  }
  return out;
}

CurveSpec make_moment_curve(int n) {
  require(n >= 2, ErrorCode::kInvalidDimension, "moment curve needs n >= 2");
  std::vector<Polynomial> coords;
  for (int j = 1; j <= n; ++j) coords.push_back(Polynomial::monomial(static_cast<unsigned>(j)));
  return CurveSpec::polynomial(CurveKind::kMoment, std::move(coords));
}

CurveSpec make_polynomial_graph(std::vector<Polynomial> functions, Rational t_lo,
                                Rational t_hi) {
  require(!functions.empty(), ErrorCode::kInvalidDimension, "graph needs at least one function");
  std::vector<Polynomial> coords{Polynomial::identity()};
  for (auto& f : functions) coords.push_back(std::move(f));
  return CurveSpec::polynomial(CurveKind::kPolynomialGraph, std::move(coords), std::move(t_lo),
                               std::move(t_hi));
}

CurveSpec make_rational_unit_circle(Rational t_lo, Rational t_hi) {
  // u = 2t - 1 runs over [-1, 1]; (1 - u^2, 2u) / (1 + u^2).
  const Polynomial u({Rational(-1), Rational(2)});
  const Polynomial one(Rational(1));
  const Polynomial u2 = u * u;
  return CurveSpec::rational({one - u2, u * Rational(2)}, {one + u2, one + u2}, std::move(t_lo),
                             std::move(t_hi));
}

Jet eval_jet(const CurveSpec& curve, const Rational& t, int order) {
  require(order >= 0 && order <= curve.smoothness_order(), ErrorCode::kUnsupportedOrder,
          "jet order " + std::to_string(order) + " exceeds smoothness order " +
              std::to_string(curve.smoothness_order()));
  require(curve.contains(t), ErrorCode::kDomain,
          "parameter " + to_string(t) + " outside [" + to_string(curve.t_lo()) + ", " +
              to_string(curve.t_hi()) + "]");
  const auto n = static_cast<std::size_t>(curve.dimension());
  const auto terms = static_cast<std::size_t>(order) + 1;
  Jet jet;
  jet.mode = curve.arithmetic_mode();
  jet.derivatives.assign(static_cast<std::size_t>(order), std::vector<double>(n));
  jet.point.resize(n);
  if (curve.is_exact()) {
    auto series = curve.exact_taylor(t, terms);
    jet.exact_point.resize(n);
    jet.exact_derivatives.assign(static_cast<std::size_t>(order), std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
      jet.exact_point[i] = series[i][0];
      jet.point[i] = series[i][0].get_d();
      for (std::size_t k = 1; k < terms; ++k) {
        jet.exact_derivatives[k - 1][i] = series[i].derivative(k);
        jet.derivatives[k - 1][i] = jet.exact_derivatives[k - 1][i].get_d();
      }
    }
    return jet;
  }
  auto series = curve.floating_taylor(to_high(t), terms);
  double magnitude = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    jet.point[i] = series[i][0].convert_to<double>();
    magnitude = std::max(magnitude, std::abs(jet.point[i]));
    for (std::size_t k = 1; k < terms; ++k) {
      jet.derivatives[k - 1][i] = series[i].derivative(k).convert_to<double>();
      magnitude = std::max(magnitude, std::abs(jet.derivatives[k - 1][i]));
    }
  }
  // Extended-precision error is far below the final rounding to double.
  jet.error_estimate = magnitude * (std::numeric_limits<double>::epsilon() / 2 +
                                    static_cast<double>(terms) * high_epsilon());
  return jet;
}

Rational exact_determinant(std::vector<std::vector<Rational>> rows) {
  const std::size_t n = rows.size();
  if (n == 0) return 1;
  // Clear denominators row by row, then Bareiss over the integers.
  std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
  Integer scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    require(rows[i].size() == n, ErrorCode::kInvalidArgument, "determinant of non-square matrix");
    Integer l = 1;
    for (const auto& v : rows[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = rows[i][j].get_num() * (l / rows[i][j].get_den());
    }
    scale *= l;
  }
  int sign = 1;
  Integer previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
      }
    }
    previous = m[k][k];
  }
  Rational det(m[n - 1][n - 1] * sign, scale);
  det.canonicalize();
  return det;
}

Polynomial polynomial_determinant(std::vector<std::vector<Polynomial>> m) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial(Rational(1));
  int sign = 1;
  Polynomial previous(Rational(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k].is_zero()) ++swap;
      if (swap == n) return {};
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], previous);
      }
    }
    previous = m[k][k];
  }
  return m[n - 1][n - 1] * Rational(sign);
}

WronskianValue wronskian(const CurveSpec& curve, const Rational& t) {
  const int n = curve.dimension();
  Jet jet = eval_jet(curve, t, n);
  WronskianValue w;
  if (jet.mode == ArithmeticMode::kExact) {
    w.exact = exact_determinant(jet.exact_derivatives);
    w.value = w.exact->get_d();
    return w;
  }
  // Redo the elimination in extended precision; the double jet only
  // supplies the reported entries.
  auto series = curve.floating_taylor(to_high(t), static_cast<std::size_t>(n) + 1);
  const auto dim = static_cast<std::size_t>(n);
  std::vector<std::vector<HighFloat>> m(dim, std::vector<HighFloat>(dim));
  HighFloat hadamard = 1;
  for (std::size_t k = 0; k < dim; ++k) {
    HighFloat norm2 = 0;
    for (std::size_t i = 0; i < dim; ++i) {
      m[k][i] = series[i].derivative(k + 1);
      norm2 += m[k][i] * m[k][i];
    }
    hadamard *= sqrt(norm2);
  }
  HighFloat det = 1;
  for (std::size_t k = 0; k < dim; ++k) {
    std::size_t pivot = k;
    for (std::size_t i = k + 1; i < dim; ++i) {
      if (abs(m[i][k]) > abs(m[pivot][k])) pivot = i;
    }
    if (m[pivot][k] == 0) {
      det = 0;
      break;
    }
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      det = -det;
    }
    det *= m[k][k];
    for (std::size_t i = k + 1; i < dim; ++i) {
      const HighFloat f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < dim; ++j) m[i][j] -= f * m[k][j];
    }
  }
  w.value = det.convert_to<double>();
  const double rounding = std::abs(w.value) * std::numeric_limits<double>::epsilon() / 2;
  w.error_estimate =
      rounding + (hadamard * HighFloat(static_cast<long>(dim * dim)) *
                  std::numeric_limits<HighFloat>::epsilon())
                     .convert_to<double>();
  return w;
}

Polynomial wronskian_polynomial(const CurveSpec& curve) {
  require(curve.is_polynomial(), ErrorCode::kInvalidArgument,
          "symbolic Wronskian needs polynomial coordinates");
  const auto n = static_cast<std::size_t>(curve.dimension());
  std::vector<std::vector<Polynomial>> m(n, std::vector<Polynomial>(n));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      m[k][i] = curve.coordinates()[i].derivative(static_cast<unsigned>(k + 1));
    }
  }
  return polynomial_determinant(std::move(m));
}

NondegeneracyCertificate certify_nondegenerate(const CurveSpec& curve, double c0, int grid) {
  require(grid >= 2, ErrorCode::kInvalidArgument, "certification grid must be >= 2");
  require(c0 >= 0 && std::isfinite(c0), ErrorCode::kInvalidArgument, "c0 must be >= 0");
  NondegeneracyCertificate cert;
  cert.c0 = c0;
  cert.grid_resolution = grid;
  const Rational bound = from_double(c0);
  const Rational step = (curve.t_hi() - curve.t_lo()) / grid;

  bool violated = false;
  double min_abs = std::numeric_limits<double>::infinity();
  double previous = 0.0;
  double max_jump = 0.0;
  for (int i = 0; i <= grid; ++i) {
    const Rational t = curve.t_lo() + step * i;
    const WronskianValue w = wronskian(curve, t);
    const bool at_or_below =
        w.exact ? abs(*w.exact) <= bound : std::abs(w.value) <= c0;
    violated = violated || at_or_below;
    if (std::abs(w.value) < min_abs) {
      min_abs = std::abs(w.value);
      cert.argmin_t = t.get_d();
    }
    if (i > 0) max_jump = std::max(max_jump, std::abs(w.value - previous));
    previous = w.value;
  }
  cert.min_sampled_wronskian = min_abs;
  // (max finite-difference slope) x (spacing) is the largest jump between samples.
  cert.margin_estimate = max_jump;

  if (violated) {
    cert.status = CertificateStatus::kFailed;
    return cert;
  }
  if (!curve.is_polynomial()) {
    cert.status = CertificateStatus::kSampledOnly;
    return cert;
  }
  // Exact decision: with s the sign of W, |W| > c0 on the domain iff
  // s W - c0 has no root there (it is positive at the sampled points).
  const Polynomial w = wronskian_polynomial(curve);
  const int s = sgn(w(curve.t_lo()));
  const Polynomial shifted = w * Rational(s) - Polynomial(bound);
  if (shifted.is_zero() || !isolate_real_roots(shifted, curve.t_lo(), curve.t_hi()).empty()) {
    cert.status = CertificateStatus::kFailed;
    return cert;
  }
  cert.status = CertificateStatus::kCertified;
  cert.margin_estimate = 0.0;
  cert.margin_exact = true;
  return cert;
}

}  // namespace curvelift
