#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pqcalc/scalars.hpp"

namespace pq {

/// Dense polynomial over the rationals in the canonical basis {x^i}.
/// Trailing zeros are always stripped; the zero polynomial has no coefficients.
class Polynomial {
 public:
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(int n, const Rational& coeff = Rational(1));

  /// "c0,c1,...,cN" with each entry a rational literal.
  static Polynomial parse(std::string_view text);
  /// Inverse of parse; the zero polynomial prints as "0".
  std::string str() const;

  std::span<const Rational> coeffs() const { return coeffs_; }
  Rational coeff(int i) const;
  int degree() const { return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  Rational operator()(const Rational& x) const;
  double operator()(double x) const;

  /// x -> c*x
  Polynomial scaled_argument(const Rational& c) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& rhs);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial lhs, const Polynomial& rhs) { return lhs *= rhs; }
  friend Polynomial operator*(Polynomial lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Polynomial operator*(const Rational& lhs, Polynomial rhs) { return rhs *= lhs; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void normalize();

  std::vector<Rational> coeffs_;
};

Rational eval_poly(const Polynomial& f, const Rational& x);
double eval_poly(const Polynomial& f, double x);

/// D_{p,q} on the canonical basis: x^n -> [n] x^{n-1}.
Polynomial pq_derive_poly(const Polynomial& f, const PqParams& params);
/// k-fold D_{p,q}; k = 0 is the identity.
Polynomial pq_derive_poly_k(const Polynomial& f, int k, const PqParams& params);

/// Exact difference quotient (h(px) - h(qx)) / ((p - q) x) for x != 0.
/// Works for any exactly evaluable h, including rational functions.
Rational pq_difference_quotient(const std::function<Rational(const Rational&)>& h, const Rational& x,
                                const PqParams& params);

/// A real function sampled pointwise, with f'(0) if the caller knows it.
struct NumericFn {
  std::function<double(double)> eval;
  std::optional<double> derivative_at_zero;

  double operator()(double x) const { return eval(x); }
};

NumericFn from_polynomial(const Polynomial& f);

/// (f(px) - f(qx)) / ((p - q) x) for x != 0, f'(0) at x = 0.
///
/// When f'(0) is not supplied the quotient is evaluated at x = 2^-10, 2^-11,
/// ..., 2^-40 and accepted once two successive values agree to 1e-8 relative;
/// if they never do, Error(MissingDerivativeAtZero) is thrown.
double pq_derive_fn(const NumericFn& f, double x, const PqParams& params);

}  // namespace pq
