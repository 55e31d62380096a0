#include "pqcalc/scalars.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

namespace pq {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NegativeArgument: return "NegativeArgument";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NonPositiveBase: return "NonPositiveBase";
    case ErrorCode::PoleAtPoint: return "PoleAtPoint";
    case ErrorCode::MissingDerivativeAtZero: return "MissingDerivativeAtZero";
    case ErrorCode::DegenerateRegime: return "DegenerateRegime";
    case ErrorCode::WrongRegime: return "WrongRegime";
    case ErrorCode::InvalidInterval: return "InvalidInterval";
    case ErrorCode::InvalidPolicy: return "InvalidPolicy";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DivergenceDetected: return "DivergenceDetected";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

namespace {

mpz_class to_mpz(long long v) { return mpz_class(std::to_string(v)); }

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// Rational

Rational::Rational(long long value) : value_(to_mpz(value)) {}

Rational::Rational(long long num, long long den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
  value_ = mpq_class(to_mpz(num), to_mpz(den));
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string_view s = trim(text);
  std::string_view body = s;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string_view num = body;
  std::string_view den = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorCode::Parse, "not a rational literal: '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw Error(ErrorCode::DivisionByZero, "rational literal with zero denominator");
  if (negative) n = -n;
  return Rational(mpq_class(n, d));
}

std::string Rational::str() const { return value_.get_str(); }

double Rational::to_double() const {
  // mpq_get_d truncates; go through the exact quotient of long doubles where
  // it matters is unnecessary for the tolerances used here.
  return value_.get_d();
}

bool Rational::is_integer() const { return value_.get_den() == 1; }

Rational Rational::abs() const { return Rational(::abs(value_)); }

Rational Rational::pow(long long exponent) const {
  if (exponent == 0) return Rational(1);
  if (exponent < 0) {
    if (is_zero()) throw Error(ErrorCode::DivisionByZero, "zero raised to a negative power");
    return (Rational(1) / *this).pow(-exponent);
  }
  mpz_class num;
  mpz_class den;
  const auto e = static_cast<unsigned long>(exponent);
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), e);
  return Rational(mpq_class(num, den));
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

// ---------------------------------------------------------------------------
// PqParams

const char* to_string(Regime regime) noexcept {
  switch (regime) {
    case Regime::RatioLtOne: return "lt1";
    case Regime::RatioGtOne: return "gt1";
    case Regime::Degenerate: return "degenerate";
  }
  return "unknown";
}

PqParams::PqParams(Rational p, Rational q) : p_(std::move(p)), q_(std::move(q)) {
  if (p_ == q_) throw Error(ErrorCode::InvalidParams, "p and q must differ");
  if (p_.is_zero() || q_.is_zero()) throw Error(ErrorCode::InvalidParams, "p and q must be nonzero");
}

Regime PqParams::regime() const {
  const auto c = q_.abs() <=> p_.abs();
  if (c < 0) return Regime::RatioLtOne;
  if (c > 0) return Regime::RatioGtOne;
  return Regime::Degenerate;
}

// ---------------------------------------------------------------------------
// FloatScalar

FloatScalar::FloatScalar(double value, double abs_eps, double rel_eps)
    : value_(value), abs_eps_(abs_eps), rel_eps_(rel_eps) {
  if (!std::isfinite(value)) throw Error(ErrorCode::InvalidArgument, "FloatScalar must be finite");
  if (!(abs_eps >= 0.0) || !(rel_eps >= 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "tolerances must be nonnegative");
  }
}

bool FloatScalar::approx_equal(double other) const {
  if (!std::isfinite(other)) return false;
  const double scale = std::max(std::fabs(value_), std::fabs(other));
  return std::fabs(value_ - other) <= std::max(abs_eps_, rel_eps_ * scale);
}

// ---------------------------------------------------------------------------
// Twin-basic combinatorics

Rational bracket(long long n, const PqParams& params) {
  const auto& p = params.p();
  const auto& q = params.q();
  return (p.pow(n) - q.pow(n)) / (p - q);
}

FloatScalar bracket_alpha(double alpha, const PqParams& params) {
  if (params.p().sign() <= 0 || params.q().sign() <= 0) {
    throw Error(ErrorCode::NonPositiveBase, "real powers need p > 0 and q > 0");
  }
  if (!std::isfinite(alpha)) throw Error(ErrorCode::InvalidArgument, "alpha must be finite");
  const double p = params.p_value();
  const double q = params.q_value();
  // p^a - q^a = q^a * expm1(a ln(p/q)) avoids cancellation when p is close to q.
  const double value = std::pow(q, alpha) * std::expm1(alpha * std::log(p / q)) / (p - q);
  return FloatScalar(value);
}

Rational pq_factorial(long long n, const PqParams& params) {
  if (n < 0) throw Error(ErrorCode::NegativeArgument, "factorial of a negative integer");
  Rational result(1);
  for (long long k = 1; k <= n; ++k) result *= bracket(k, params);
  return result;
}

Rational pq_binomial(long long n, long long k, const PqParams& params) {
  if (k < 0 || k > n) throw Error(ErrorCode::OutOfRange, "binomial needs 0 <= k <= n");
  // [n]!/([k]![n-k]!) = prod_{i<k} [n-i]/[i+1]
  Rational result(1);
  for (long long i = 0; i < k; ++i) result *= bracket(n - i, params) / bracket(i + 1, params);
  return result;
}

}  // namespace pq
