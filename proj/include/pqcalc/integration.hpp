#pragma once

#include <vector>

#include "pqcalc/polynomial.hpp"
#include "pqcalc/scalars.hpp"
#include "pqcalc/series.hpp"

namespace pq {

struct IntegralResult {
  double value = 0.0;
  long terms_used = 0;
  double tail_estimate = 0.0;
  Regime regime = Regime::RatioLtOne;
  SeriesStatus status = SeriesStatus::Converged;
};

/// sum a_n x^{n+1}/[n+1] + constant; its D_{p,q} is f exactly.
Polynomial antiderive_poly(const Polynomial& f, const PqParams& params, const Rational& constant = Rational(0));

/// ∫_0^a f d_{p,q}x as a truncated lattice sum.
///
/// With r the ratio among q/p, p/q of modulus below one and s the other
/// parameter (s = p when r = q/p), the k-th term is
/// (s - r s) a r^k / s * f(a r^k / s). Needs a >= 0 and a non-degenerate
/// regime; divergence is reported in the status, not thrown.
IntegralResult integral_zero_to(const NumericFn& f, double a, const PqParams& params,
                                const TruncationPolicy& policy = {});

/// The first `count` terms of the series behind integral_zero_to.
std::vector<double> integral_zero_to_terms(const NumericFn& f, double a, const PqParams& params, long count);

/// Exact partial sum of the first `terms` lattice terms of ∫_0^a f for a
/// polynomial f at rational a.
Rational integral_zero_to_partial(const Polynomial& f, const Rational& a, const PqParams& params, long terms);

/// ∫_0^b - ∫_0^a for 0 <= a < b; the status is the worse of the two.
IntegralResult integral(const NumericFn& f, double a, double b, const PqParams& params,
                        const TruncationPolicy& policy = {});

/// ∫_0^∞ as the bilateral lattice sum through x = 1. Each direction is
/// truncated on its own; the status is the worse of the two.
IntegralResult integral_improper(const NumericFn& f, const PqParams& params, const TruncationPolicy& policy = {});

/// ∫_a^∞ for a > 0: the outward half of the bilateral sum through x = a,
/// so that integral_zero_to(a) + integral_to_infinity(a) is the full sum.
IntegralResult integral_to_infinity(const NumericFn& f, double a, const PqParams& params,
                                    const TruncationPolicy& policy = {});

/// ∫ f d_{p,q}g at x = sum_k f(q^k x/p^{k+1}) (g(q^k x/p^k) - g(q^{k+1} x/p^{k+1})).
/// Only defined for |q/p| < 1.
IntegralResult integral_riemann_stieltjes(const NumericFn& f, const NumericFn& g, double x,
                                          const PqParams& params, const TruncationPolicy& policy = {});

struct BoundednessReport {
  bool bounded = false;
  double observed_bound = 0.0;
};

/// Heuristic check of sup |f(x) x^alpha| < ∞ on (0, A]: samples the grid
/// x_i = A r^i (r the lattice ratio of params, i < samples) and calls the
/// function bounded when the max over the deeper half of the grid does not
/// exceed the max over the first half.
BoundednessReport check_convergence_hypothesis(const NumericFn& f, double upper, double alpha, int samples,
                                               const PqParams& params);

struct IdentityGap {
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;
  /// Status of the integrals that produced the left side (worst of them).
  SeriesStatus status = SeriesStatus::Converged;
};

/// lhs = ∫_a^b D_{p,q}F d_{p,q}x with D_{p,q}F sampled through pq_derive_fn,
/// rhs = F(b) - F(a). b = +inf routes through integral_to_infinity and
/// evaluates F at +inf, so the evaluator has to return the limit there.
IdentityGap newton_leibniz_check(const NumericFn& antiderivative, double a, double b, const PqParams& params,
                                 const TruncationPolicy& policy = {});

/// lhs = ∫_a^b f(px) D_{p,q}g(x) d_{p,q}x,
/// rhs = f(b)g(b) - f(a)g(a) - ∫_a^b g(qx) D_{p,q}f(x) d_{p,q}x.
IdentityGap integrate_by_parts(const NumericFn& f, const NumericFn& g, double a, double b, const PqParams& params,
                               const TruncationPolicy& policy = {});

}  // namespace pq
