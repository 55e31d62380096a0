#include "pqcalc/taylor.hpp"

#include <cmath>

namespace pq {

Polynomial PowerBasisExpansion::reconstruct(const PqParams& params) const {
  Polynomial out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    out += coeffs[k] * expand_pq_power(a, static_cast<long long>(k), params, Rational(1), orientation);
  }
  return out;
}

Rational PowerBasisExpansion::operator()(const Rational& x, const PqParams& params) const {
  Rational out(0);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const auto kk = static_cast<long long>(k);
    out += coeffs[k] * (orientation == Orientation::XMinusA ? pq_power_value(x, a, kk, params)
                                                            : pq_power_value(a, x, kk, params));
  }
  return out;
}

namespace {

PowerBasisExpansion expand(const Polynomial& f, const Rational& a, const PqParams& params, Orientation orientation) {
  PowerBasisExpansion out{a, orientation, {}};
  if (f.is_zero()) return out;
  const int degree = f.degree();
  const Rational& base = orientation == Orientation::XMinusA ? params.p() : params.q();
  out.coeffs.reserve(static_cast<std::size_t>(degree) + 1);
  Polynomial dk = f;
  Rational factorial(1);
  for (int k = 0; k <= degree; ++k) {
    if (k > 0) {
      dk = pq_derive_poly(dk, params);
      factorial *= bracket(k, params);
    }
    Rational c = base.pow(-choose2(k)) * dk(a * base.pow(-k)) / factorial;
    if (orientation == Orientation::AMinusX && k % 2 == 1) c = -c;
    out.coeffs.push_back(std::move(c));
  }
  return out;
}

std::vector<Rational> connect(long long n, const Rational& a, const PqParams& params, Orientation orientation) {
  if (n < 0) throw Error(ErrorCode::NegativeArgument, "connection formulas need n >= 0");
  const Rational& base = orientation == Orientation::XMinusA ? params.p() : params.q();
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  for (long long k = 0; k <= n; ++k) {
    Rational c = base.pow(-choose2(k)) * pq_binomial(n, k, params) * (a * base.pow(-k)).pow(n - k);
    if (orientation == Orientation::AMinusX && k % 2 == 1) c = -c;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

PowerBasisExpansion taylor_expand(const Polynomial& f, const Rational& a, const PqParams& params) {
  return expand(f, a, params, Orientation::XMinusA);
}

PowerBasisExpansion taylor_expand_reversed(const Polynomial& f, const Rational& a, const PqParams& params) {
  return expand(f, a, params, Orientation::AMinusX);
}

std::vector<Rational> connect_monomial(long long n, const Rational& a, const PqParams& params) {
  return connect(n, a, params, Orientation::XMinusA);
}

std::vector<Rational> connect_monomial_reversed(long long n, const Rational& a, const PqParams& params) {
  return connect(n, a, params, Orientation::AMinusX);
}

std::vector<Rational> connect_power_to_power(const Rational& b, const Rational& a, long long n,
                                             const PqParams& params, Orientation orientation) {
  if (n < 0) throw Error(ErrorCode::NegativeArgument, "connection formulas need n >= 0");
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  for (long long k = 0; k <= n; ++k) {
    const Rational shift = orientation == Orientation::XMinusA ? pq_power_value(a, b, n - k, params)
                                                               : pq_power_value(b, a, n - k, params);
    out.push_back(pq_binomial(n, k, params) * shift);
  }
  return out;
}

Rational q_pochhammer(const Rational& a, const Rational& q, long long n) {
  if (n < 0) throw Error(ErrorCode::NegativeArgument, "q-Pochhammer symbol needs n >= 0");
  Rational out(1);
  Rational qj(1);
  for (long long j = 0; j < n; ++j) {
    out *= Rational(1) - a * qj;
    qj *= q;
  }
  return out;
}

bool q_binomial_reduction_check(const Rational& a, const Rational& b, long long n, const Rational& q) {
  const PqParams params(Rational(1), q);
  const Rational ab = a * b;
  const Rational direct = q_pochhammer(ab, q, n);

  const auto coeffs = connect_power_to_power(ab, a, n, params, Orientation::XMinusA);
  Rational connected(0);
  for (long long k = 0; k <= n; ++k) {
    connected += coeffs[static_cast<std::size_t>(k)] * pq_power_value(Rational(1), a, k, params);
  }

  Rational qbinomial(0);
  for (long long k = 0; k <= n; ++k) {
    qbinomial += pq_binomial(n, k, params) * a.pow(n - k) * q_pochhammer(b, q, n - k) * q_pochhammer(a, q, k);
  }
  return connected == direct && qbinomial == direct;
}

Rational heine_coeff(long long n, long long j, const PqParams& params) {
  if (n < 1) throw Error(ErrorCode::OutOfRange, "Heine coefficients need n >= 1");
  if (j < 0) throw Error(ErrorCode::NegativeArgument, "Heine coefficients need j >= 0");
  return pq_binomial(n + j - 1, j, params) * params.p().pow(j - choose2(j));
}

SeriesSum heine_series(long long n, double x, const PqParams& params, const TruncationPolicy& policy) {
  if (n < 1) throw Error(ErrorCode::OutOfRange, "Heine series needs n >= 1");
  const double p = params.p_value();
  const double q = params.q_value();
  auto br = [&](long long m) { return (std::pow(p, static_cast<double>(m)) - std::pow(q, static_cast<double>(m))) / (p - q); };
  // c_j / c_{j-1} = [n+j-1]/[j] * p^{2-j}
  double coeff = 1.0;
  double xj = 1.0;
  long last = 0;
  return sum_series(
      [&](long j) {
        for (; last < j; ++last) {
          const long long jj = last + 1;
          coeff *= br(n + jj - 1) / br(jj) * std::pow(p, static_cast<double>(2 - jj));
          xj *= x;
        }
        return coeff * xj;
      },
      policy);
}

double heine_series_eval(long long n, double x, const PqParams& params, const TruncationPolicy& policy) {
  const SeriesSum s = heine_series(n, x, params, policy);
  if (s.status != SeriesStatus::Converged) {
    throw Error(ErrorCode::DivergenceDetected,
                std::string("Heine series did not converge (") + to_string(s.status) + ")");
  }
  return s.value;
}

}  // namespace pq
