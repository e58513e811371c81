#pragma once

#include <array>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "curvelift/monomial.hpp"
#include "curvelift/polynomial.hpp"
#include "curvelift/rational.hpp"
#include "curvelift/taylor.hpp"

namespace curvelift {

enum class CurveKind {
  kMoment,
  kPolynomialParametric,
  kPolynomialGraph,
  kCircleArc,
  kRationalParametric,
  kLifted,
};

std::string to_string(CurveKind kind);
CurveKind parse_curve_kind(const std::string& name);

enum class ArithmeticMode { kExact, kFloating };

// Analytic builtins support derivatives of every order; this is the cap the
// jet evaluator advertises unless a curve file asks for less.
inline constexpr int kDefaultSmoothnessOrder = 32;

// A parameterized curve t -> (γ_1(t), ..., γ_n(t)) on [t_lo, t_hi].
//
// Three representations back the kinds:
//   * polynomial coordinates (moment, polynomial-*, lifts of those): exact;
//   * rational-function coordinates p_i/q_i (rational-parametric and its
//     lifts): exact, denominators must not vanish on the domain;
//   * (cos 2πt, sin 2πt) and monomial lifts of it: floating.
// Instances are immutable.
class CurveSpec {
 public:
  static CurveSpec polynomial(CurveKind kind, std::vector<Polynomial> coordinates,
                              Rational t_lo = 0, Rational t_hi = 1,
                              int smoothness_order = kDefaultSmoothnessOrder);
  static CurveSpec rational(std::vector<Polynomial> numerators,
                            std::vector<Polynomial> denominators, Rational t_lo, Rational t_hi,
                            int smoothness_order = kDefaultSmoothnessOrder,
                            CurveKind kind = CurveKind::kRationalParametric);
  static CurveSpec circle_arc(Rational t_lo = 0, Rational t_hi = 1,
                              int smoothness_order = kDefaultSmoothnessOrder);
  // Floating lift of a non-exact planar base curve.
  static CurveSpec lifted_floating(const CurveSpec& base, const MonomialSet& monomials);

  CurveKind kind() const { return kind_; }
  int dimension() const { return dimension_; }
  const Rational& t_lo() const { return t_lo_; }
  const Rational& t_hi() const { return t_hi_; }
  int smoothness_order() const { return smoothness_order_; }

  bool is_polynomial() const { return rep_ == Rep::kPolynomial; }
  bool is_rational() const { return rep_ == Rep::kRational; }
  bool is_exact() const { return is_polynomial() || is_rational(); }
  ArithmeticMode arithmetic_mode() const {
    return is_exact() ? ArithmeticMode::kExact : ArithmeticMode::kFloating;
  }

  // Polynomial coordinates (numerators for the rational representation).
  const std::vector<Polynomial>& coordinates() const { return numerators_; }
  const std::vector<Polynomial>& denominators() const { return denominators_; }
  const CurveSpec* base() const { return base_.get(); }
  const MonomialSet& monomials() const { return monomials_; }

  // First coordinate is exactly t.
  bool is_graph_form() const;

  bool contains(const Rational& t) const { return t_lo_ <= t && t <= t_hi_; }

  // γ(t) and its first `order` derivatives (order <= 2) in double precision,
  // written row-major into out[(order + 1) * n]. This is the hot path for
  // distance queries; it performs no domain checks.
  void evaluate(double t, int order, std::span<double> out) const;

  // Taylor expansions of every coordinate at t, `terms` coefficients each.
  // exact_taylor requires is_exact().
  std::vector<TaylorSeries<Rational>> exact_taylor(const Rational& t, std::size_t terms) const;
  std::vector<TaylorSeries<HighFloat>> floating_taylor(const HighFloat& t,
                                                       std::size_t terms) const;

 private:
  enum class Rep { kPolynomial, kRational, kCircle, kLiftedFloating };

  CurveSpec() = default;
  void validate() const;
  void cache_doubles();

  CurveKind kind_ = CurveKind::kPolynomialParametric;
  Rep rep_ = Rep::kPolynomial;
  int dimension_ = 0;
  Rational t_lo_ = 0;
  Rational t_hi_ = 1;
  int smoothness_order_ = kDefaultSmoothnessOrder;
  std::vector<Polynomial> numerators_;
  std::vector<Polynomial> denominators_;
  std::shared_ptr<const CurveSpec> base_;
  MonomialSet monomials_;

  // Double coefficients of each coordinate and of its first two
  // derivatives: [coordinate][derivative order][power].
  std::vector<std::array<std::vector<double>, 3>> num_d_;
  std::vector<std::array<std::vector<double>, 3>> den_d_;
};

// Builtins.
CurveSpec make_moment_curve(int n);
// (t, f_2(t), ..., f_n(t)).
CurveSpec make_polynomial_graph(std::vector<Polynomial> functions, Rational t_lo = 0,
                                Rational t_hi = 1);
// ((1 - u^2)/(1 + u^2), 2u/(1 + u^2)) with u = 2t - 1, on [t_lo, t_hi]; the
// full domain [0, 1] traces the right half of the unit circle.
CurveSpec make_rational_unit_circle(Rational t_lo = 0, Rational t_hi = 1);

struct Jet {
  ArithmeticMode mode = ArithmeticMode::kExact;
  std::vector<double> point;
  // Row i - 1 holds γ^(i)(t).
  std::vector<std::vector<double>> derivatives;
  // Populated in exact mode only.
  std::vector<Rational> exact_point;
  std::vector<std::vector<Rational>> exact_derivatives;
  // Bound on the absolute rounding error of any entry; 0 in exact mode.
  double error_estimate = 0.0;
};

Jet eval_jet(const CurveSpec& curve, const Rational& t, int order);

struct WronskianValue {
  double value = 0.0;
  std::optional<Rational> exact;
  double error_estimate = 0.0;
};

// det of the n x n matrix whose row i is γ^(i)(t).
WronskianValue wronskian(const CurveSpec& curve, const Rational& t);

// W(t) as an exact polynomial; requires a polynomial representation.
Polynomial wronskian_polynomial(const CurveSpec& curve);

// Fraction-free (Bareiss) determinant of a rational matrix.
Rational exact_determinant(std::vector<std::vector<Rational>> rows);
// Fraction-free determinant over Q[t].
Polynomial polynomial_determinant(std::vector<std::vector<Polynomial>> rows);

enum class CertificateStatus { kCertified, kSampledOnly, kFailed };
std::string to_string(CertificateStatus status);

struct NondegeneracyCertificate {
  double min_sampled_wronskian = 0.0;
  double c0 = 0.0;
  int grid_resolution = 0;
  double margin_estimate = 0.0;
  // margin_estimate is exactly 0 because the bound was decided symbolically.
  bool margin_exact = false;
  CertificateStatus status = CertificateStatus::kFailed;
  // Parameter of the smallest sampled |W|.
  double argmin_t = 0.0;
};

NondegeneracyCertificate certify_nondegenerate(const CurveSpec& curve, double c0, int grid);

}  // namespace curvelift
