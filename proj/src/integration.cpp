#include "pqcalc/integration.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace pq {

namespace {

// Every integral runs on the lattice {scale * ratio^k}, with |ratio| < 1.
// Both regimes reduce to this once p and q are ordered by modulus, since the
// (p,q)-integral is symmetric under p <-> q.
struct Lattice {
  double big;    // the parameter of larger modulus
  double small;  // the other one
  double ratio;  // small / big

  double weight() const { return big - small; }
};

Lattice lattice_of(const PqParams& params) {
  switch (params.regime()) {
    case Regime::RatioLtOne:
      return {params.p_value(), params.q_value(), params.q_value() / params.p_value()};
    case Regime::RatioGtOne:
      return {params.q_value(), params.p_value(), params.p_value() / params.q_value()};
    case Regime::Degenerate:
      break;
  }
  throw Error(ErrorCode::DegenerateRegime, "(p,q)-integrals need |q/p| != 1");
}

IntegralResult to_result(const SeriesSum& s, Regime regime) {
  return {s.value, s.terms_used, s.tail_estimate, regime, s.status};
}

IntegralResult combine(const IntegralResult& lhs, const IntegralResult& rhs, double sign) {
  return {lhs.value + sign * rhs.value, lhs.terms_used + rhs.terms_used,
          std::max(lhs.tail_estimate, rhs.tail_estimate), lhs.regime, worse(lhs.status, rhs.status)};
}

// divergence_window counts terms at ratio 1/2. On a finer lattice the same
// number of terms covers a much shorter stretch of x, and a smooth integrand
// can grow that long on its way out of a zero, so the window is widened until
// it spans the same shrink factor 2^window.
TruncationPolicy scaled_policy(const TruncationPolicy& policy, double ratio) {
  TruncationPolicy out = policy;
  const double per_term = -std::log(std::fabs(ratio));
  if (per_term > 0.0 && per_term < std::log(2.0)) {
    const double needed = std::ceil(static_cast<double>(policy.divergence_window) * std::log(2.0) / per_term);
    out.divergence_window = std::max(policy.divergence_window, static_cast<long>(needed));
  }
  return out;
}

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw Error(ErrorCode::InvalidArgument, std::string(what) + " must be finite");
}

// Terms (big - small) * x * f(x) with x = origin * ratio^{step * k}, k >= first.
SeriesSum lattice_sum(const NumericFn& f, const Lattice& lat, double origin, int step, long first,
                      const TruncationPolicy& policy) {
  return sum_series(
      [&](long k) {
        const double x = origin * std::pow(lat.ratio, static_cast<double>(step * (k + first)));
        return lat.weight() * x * f(x);
      },
      scaled_policy(policy, lat.ratio));
}

}  // namespace

Polynomial antiderive_poly(const Polynomial& f, const PqParams& params, const Rational& constant) {
  std::vector<Rational> out(f.coeffs().size() + 1);
  out[0] = constant;
  for (int n = 0; n <= f.degree(); ++n) {
    out[static_cast<std::size_t>(n) + 1] = f.coeff(n) / bracket(n + 1, params);
  }
  return Polynomial(std::move(out));
}

IntegralResult integral_zero_to(const NumericFn& f, double a, const PqParams& params,
                                const TruncationPolicy& policy) {
  policy.validate();
  const Lattice lat = lattice_of(params);
  require_finite(a, "upper limit");
  if (a < 0.0) throw Error(ErrorCode::InvalidInterval, "integrals start at 0 and need a >= 0");
  if (a == 0.0) return {0.0, 0, 0.0, params.regime(), SeriesStatus::Converged};
  return to_result(lattice_sum(f, lat, a / lat.big, 1, 0, policy), params.regime());
}

std::vector<double> integral_zero_to_terms(const NumericFn& f, double a, const PqParams& params, long count) {
  const Lattice lat = lattice_of(params);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0L)));
  for (long k = 0; k < count; ++k) {
    const double x = a / lat.big * std::pow(lat.ratio, static_cast<double>(k));
    out.push_back(lat.weight() * x * f(x));
  }
  return out;
}

Rational integral_zero_to_partial(const Polynomial& f, const Rational& a, const PqParams& params, long terms) {
  if (params.regime() == Regime::Degenerate) throw Error(ErrorCode::DegenerateRegime, "(p,q)-integrals need |q/p| != 1");
  const bool forward = params.regime() == Regime::RatioLtOne;
  const Rational& big = forward ? params.p() : params.q();
  const Rational& small = forward ? params.q() : params.p();
  const Rational ratio = small / big;
  Rational x = a / big;
  Rational sum(0);
  for (long k = 0; k < terms; ++k) {
    sum += (big - small) * x * f(x);
    x *= ratio;
  }
  return sum;
}

IntegralResult integral(const NumericFn& f, double a, double b, const PqParams& params,
                        const TruncationPolicy& policy) {
  if (std::isnan(a) || std::isnan(b) || !std::isfinite(a) || a < 0.0 || !(a < b)) {
    throw Error(ErrorCode::InvalidInterval, "need 0 <= a < b");
  }
  if (std::isinf(b)) return a == 0.0 ? integral_improper(f, params, policy) : integral_to_infinity(f, a, params, policy);
  return combine(integral_zero_to(f, b, params, policy), integral_zero_to(f, a, params, policy), -1.0);
}

IntegralResult integral_improper(const NumericFn& f, const PqParams& params, const TruncationPolicy& policy) {
  return combine(integral_zero_to(f, 1.0, params, policy), integral_to_infinity(f, 1.0, params, policy), 1.0);
}

IntegralResult integral_to_infinity(const NumericFn& f, double a, const PqParams& params,
                                    const TruncationPolicy& policy) {
  policy.validate();
  const Lattice lat = lattice_of(params);
  require_finite(a, "lower limit");
  if (!(a > 0.0)) throw Error(ErrorCode::InvalidInterval, "integrals to infinity need a > 0");
  // Points a/big * ratio^{-m}, m >= 1: the outward continuation of the
  // lattice used by integral_zero_to(a).
  return to_result(lattice_sum(f, lat, a / lat.big, -1, 1, policy), params.regime());
}

IntegralResult integral_riemann_stieltjes(const NumericFn& f, const NumericFn& g, double x,
                                          const PqParams& params, const TruncationPolicy& policy) {
  policy.validate();
  if (params.regime() == Regime::Degenerate) throw Error(ErrorCode::DegenerateRegime, "need |q/p| != 1");
  if (params.regime() != Regime::RatioLtOne) throw Error(ErrorCode::WrongRegime, "defined for |q/p| < 1 only");
  require_finite(x, "x");
  if (!(x > 0.0)) throw Error(ErrorCode::InvalidArgument, "need x > 0");
  const double p = params.p_value();
  const double r = params.q_value() / p;
  return to_result(sum_series(
                       [&](long k) {
                         const double xk = x * std::pow(r, static_cast<double>(k));
                         return f(xk / p) * (g(xk) - g(xk * r));
                       },
                       scaled_policy(policy, r)),
                   params.regime());
}

BoundednessReport check_convergence_hypothesis(const NumericFn& f, double upper, double alpha, int samples,
                                               const PqParams& params) {
  if (!(upper > 0.0) || !std::isfinite(upper)) throw Error(ErrorCode::InvalidArgument, "need A > 0");
  if (!(alpha >= 0.0 && alpha < 1.0)) throw Error(ErrorCode::InvalidArgument, "need 0 <= alpha < 1");
  if (samples < 8) throw Error(ErrorCode::InvalidArgument, "need at least 8 samples");
  const double r = std::fabs(lattice_of(params).ratio);
  double first_half = 0.0;
  double second_half = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double x = upper * std::pow(r, static_cast<double>(i));
    double v = std::fabs(f(x)) * std::pow(x, alpha);
    if (std::isnan(v)) v = std::numeric_limits<double>::infinity();
    double& slot = i < samples / 2 ? first_half : second_half;
    slot = std::max(slot, v);
  }
  const double bound = std::max(first_half, second_half);
  return {std::isfinite(bound) && second_half <= first_half * (1.0 + 1e-9), bound};
}

IdentityGap newton_leibniz_check(const NumericFn& antiderivative, double a, double b, const PqParams& params,
                                 const TruncationPolicy& policy) {
  NumericFn derivative;
  derivative.eval = [&](double x) { return pq_derive_fn(antiderivative, x, params); };
  const IntegralResult lhs = integral(derivative, a, b, params, policy);
  const double rhs = antiderivative(b) - antiderivative(a);
  return {lhs.value, rhs, std::fabs(lhs.value - rhs), lhs.status};
}

IdentityGap integrate_by_parts(const NumericFn& f, const NumericFn& g, double a, double b, const PqParams& params,
                               const TruncationPolicy& policy) {
  const double p = params.p_value();
  const double q = params.q_value();
  NumericFn left;
  left.eval = [&](double x) { return f(p * x) * pq_derive_fn(g, x, params); };
  NumericFn right;
  right.eval = [&](double x) { return g(q * x) * pq_derive_fn(f, x, params); };
  const IntegralResult lhs = integral(left, a, b, params, policy);
  const IntegralResult rest = integral(right, a, b, params, policy);
  const double rhs = f(b) * g(b) - f(a) * g(a) - rest.value;
  return {lhs.value, rhs, std::fabs(lhs.value - rhs), worse(lhs.status, rest.status)};
}

}  // namespace pq
