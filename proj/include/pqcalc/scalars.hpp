#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "pqcalc/error.hpp"

namespace pq {

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator. Division by zero throws Error(DivisionByZero).
class Rational {
 public:
  Rational() = default;
  Rational(long long value);  // NOLINT(google-explicit-constructor)
  Rational(long long num, long long den);
  explicit Rational(mpq_class value);

  /// Accepts "num/den" or "int", with an optional leading sign.
  static Rational parse(std::string_view text);

  std::string str() const;
  double to_double() const;

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const;
  int sign() const { return sgn(value_); }

  Rational abs() const;
  Rational pow(long long exponent) const;

  const mpq_class& raw() const { return value_; }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) { return cmp(lhs.value_, rhs.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) <=> 0;
  }

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Which lattice the integral series run over: powers of q/p when |q/p| < 1,
/// powers of p/q when |q/p| > 1.
enum class Regime { RatioLtOne, RatioGtOne, Degenerate };

const char* to_string(Regime regime) noexcept;

/// The deformation pair (p, q). Requires p != q, p != 0, q != 0.
class PqParams {
 public:
  PqParams(Rational p, Rational q);

  const Rational& p() const { return p_; }
  const Rational& q() const { return q_; }
  double p_value() const { return p_.to_double(); }
  double q_value() const { return q_.to_double(); }

  Regime regime() const;
  PqParams swapped() const { return PqParams(q_, p_); }

  friend bool operator==(const PqParams&, const PqParams&) = default;

 private:
  Rational p_;
  Rational q_;
};

/// A double carrying the tolerances it should be compared with.
class FloatScalar {
 public:
  explicit FloatScalar(double value, double abs_eps = 1e-12, double rel_eps = 1e-12);

  double value() const { return value_; }
  double abs_eps() const { return abs_eps_; }
  double rel_eps() const { return rel_eps_; }

  /// |value - other| <= max(abs_eps, rel_eps * max(|value|, |other|))
  bool approx_equal(double other) const;

 private:
  double value_;
  double abs_eps_;
  double rel_eps_;
};

/// Twin-basic number [n] = (p^n - q^n)/(p - q); any integer n.
Rational bracket(long long n, const PqParams& params);

/// [alpha] for real alpha; needs p, q > 0.
FloatScalar bracket_alpha(double alpha, const PqParams& params);

/// [n]! = [1][2]...[n], [0]! = 1.
Rational pq_factorial(long long n, const PqParams& params);

Rational pq_binomial(long long n, long long k, const PqParams& params);

/// C(k, 2) = k(k-1)/2, the exponent that keeps reappearing next to p and q.
constexpr long long choose2(long long k) { return k * (k - 1) / 2; }

}  // namespace pq
