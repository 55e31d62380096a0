#pragma once

#include <vector>

#include "pqcalc/polynomial.hpp"
#include "pqcalc/pqpower.hpp"
#include "pqcalc/scalars.hpp"
#include "pqcalc/series.hpp"

namespace pq {

/// f(x) = sum_k coeffs[k] * basis_k(x), where basis_k is (x ⊖ a)^k or
/// (a ⊖ x)^k depending on the orientation.
struct PowerBasisExpansion {
  Rational a;
  Orientation orientation = Orientation::XMinusA;
  std::vector<Rational> coeffs;

  Polynomial reconstruct(const PqParams& params) const;
  Rational operator()(const Rational& x, const PqParams& params) const;

  friend bool operator==(const PowerBasisExpansion&, const PowerBasisExpansion&) = default;
};

/// c_k = p^{-C(k,2)} (D^k f)(a p^{-k}) / [k]!
PowerBasisExpansion taylor_expand(const Polynomial& f, const Rational& a, const PqParams& params);

/// c_k = (-1)^k q^{-C(k,2)} (D^k f)(a q^{-k}) / [k]!
PowerBasisExpansion taylor_expand_reversed(const Polynomial& f, const Rational& a, const PqParams& params);

/// Coefficients of x^n over (x ⊖ a)^k, k = 0..n. 0^0 is taken as 1.
std::vector<Rational> connect_monomial(long long n, const Rational& a, const PqParams& params);

/// Coefficients of x^n over (a ⊖ x)^k, k = 0..n.
std::vector<Rational> connect_monomial_reversed(long long n, const Rational& a, const PqParams& params);

/// XMinusA: (x ⊖ b)^n = sum_k binom(n,k) (a ⊖ b)^{n-k} (x ⊖ a)^k
/// AMinusX: (b ⊖ x)^n = sum_k binom(n,k) (b ⊖ a)^{n-k} (a ⊖ x)^k
std::vector<Rational> connect_power_to_power(const Rational& b, const Rational& a, long long n,
                                             const PqParams& params, Orientation orientation);

/// (a;q)_n = (1-a)(1-aq)...(1-aq^{n-1})
Rational q_pochhammer(const Rational& a, const Rational& q, long long n);

/// At p = 1, takes b <- ab and x = 1 in the forward power-to-power
/// connection and compares with (ab;q)_n and with the q-binomial sum built
/// from q-Pochhammer products. True when all three agree exactly.
bool q_binomial_reduction_check(const Rational& a, const Rational& b, long long n, const Rational& q);

/// binom(n+j-1, j)_{p,q} p^{j - C(j,2)}; n >= 1, j >= 0.
Rational heine_coeff(long long n, long long j, const PqParams& params);

/// Truncated sum_{j>=0} heine_coeff(n, j) x^j in double precision.
SeriesSum heine_series(long long n, double x, const PqParams& params, const TruncationPolicy& policy = {});

/// As heine_series, but throws Error(DivergenceDetected) unless converged.
double heine_series_eval(long long n, double x, const PqParams& params, const TruncationPolicy& policy = {});

}  // namespace pq
