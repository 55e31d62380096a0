#include "pqcalc/polynomial.hpp"

#include <cmath>
#include <sstream>

namespace pq {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(int n, const Rational& coeff) {
  if (n < 0) throw Error(ErrorCode::NegativeArgument, "monomial degree must be nonnegative");
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  c.back() = coeff;
  return Polynomial(std::move(c));
}

Polynomial Polynomial::parse(std::string_view text) {
  std::vector<Rational> c;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    c.push_back(Rational::parse(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Polynomial(std::move(c));
}

std::string Polynomial::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ',';
    os << coeffs_[i];
  }
  return os.str();
}

Rational Polynomial::coeff(int i) const {
  if (i < 0 || static_cast<std::size_t>(i) >= coeffs_.size()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Polynomial::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->to_double();
  return acc;
}

Polynomial Polynomial::scaled_argument(const Rational& c) const {
  std::vector<Rational> out(coeffs_);
  Rational power(1);
  for (auto& coeff : out) {
    coeff *= power;
    power *= c;
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-() const {
  Polynomial out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) { return *this += -rhs; }

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  if (coeffs_.empty() || rhs.coeffs_.empty()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& rhs) {
  for (auto& c : coeffs_) c *= rhs;
  normalize();
  return *this;
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational eval_poly(const Polynomial& f, const Rational& x) { return f(x); }
double eval_poly(const Polynomial& f, double x) { return f(x); }

Polynomial pq_derive_poly(const Polynomial& f, const PqParams& params) {
  if (f.degree() < 1) return Polynomial();
  std::vector<Rational> out(static_cast<std::size_t>(f.degree()));
  for (int n = 1; n <= f.degree(); ++n) out[static_cast<std::size_t>(n - 1)] = bracket(n, params) * f.coeff(n);
  return Polynomial(std::move(out));
}

Polynomial pq_derive_poly_k(const Polynomial& f, int k, const PqParams& params) {
  if (k < 0) throw Error(ErrorCode::NegativeArgument, "derivative order must be nonnegative");
  Polynomial out = f;
  for (int i = 0; i < k && !out.is_zero(); ++i) out = pq_derive_poly(out, params);
  return out;
}

Rational pq_difference_quotient(const std::function<Rational(const Rational&)>& h, const Rational& x,
                                const PqParams& params) {
  if (x.is_zero()) throw Error(ErrorCode::InvalidArgument, "difference quotient needs x != 0");
  const auto& p = params.p();
  const auto& q = params.q();
  return (h(p * x) - h(q * x)) / ((p - q) * x);
}

NumericFn from_polynomial(const Polynomial& f) {
  std::vector<double> c;
  c.reserve(f.coeffs().size());
  for (const auto& r : f.coeffs()) c.push_back(r.to_double());
  NumericFn fn;
  fn.eval = [c = std::move(c)](double x) {
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
  };
  fn.derivative_at_zero = f.coeff(1).to_double();
  return fn;
}

namespace {

// Below this the two quotients are treated as agreeing on f'(0) = 0, where a
// purely relative test can never succeed.
constexpr double kZeroFloor = 1e-10;

double difference_quotient(const NumericFn& f, double x, double p, double q) {
  return (f(p * x) - f(q * x)) / ((p - q) * x);
}

}  // namespace

double pq_derive_fn(const NumericFn& f, double x, const PqParams& params) {
  const double p = params.p_value();
  const double q = params.q_value();
  if (x != 0.0) return difference_quotient(f, x, p, q);
  if (f.derivative_at_zero) return *f.derivative_at_zero;

  double previous = difference_quotient(f, std::ldexp(1.0, -10), p, q);
  for (int e = 11; e <= 40; ++e) {
    const double current = difference_quotient(f, std::ldexp(1.0, -e), p, q);
    if (std::isfinite(current) && std::isfinite(previous) &&
        std::fabs(current - previous) <=
            std::max(1e-8 * std::max(std::fabs(current), std::fabs(previous)), kZeroFloor)) {
      return current;
    }
    previous = current;
  }
  throw Error(ErrorCode::MissingDerivativeAtZero, "difference quotient did not settle as x -> 0");
}

}  // namespace pq
