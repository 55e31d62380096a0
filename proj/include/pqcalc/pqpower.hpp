#pragma once

#include <string>

#include "pqcalc/polynomial.hpp"
#include "pqcalc/scalars.hpp"

namespace pq {

/// XMinusA is (γx ⊖ a)^n = (γx - a)(pγx - qa)...(p^{n-1}γx - q^{n-1}a).
/// AMinusX is (a ⊖ γx)^n = (a - γx)(pa - qγx)...(p^{n-1}a - q^{n-1}γx).
/// The two are not related by a sign flip unless p = q.
enum class Orientation { XMinusA, AMinusX };

const char* to_string(Orientation o) noexcept;

/// Value of (u ⊖ v)^n for any integer n. Negative n uses
/// (u ⊖ v)^{-n} = 1 / (p^{-n}u ⊖ q^{-n}v)^n. Throws PoleAtPoint when a
/// denominator factor vanishes.
Rational pq_power_value(const Rational& u, const Rational& v, long long n, const PqParams& params);

struct PqPowerExpr {
  Rational gamma{1};
  Rational a{0};
  long long n = 0;
  Orientation orientation = Orientation::XMinusA;
  PqParams params;

  /// "pqpow(a=<rat>, n=<int>, gamma=<rat>)" or "pqpowrev(...)"
  std::string str() const;
};

/// Parses the textual form produced by PqPowerExpr::str(). Missing gamma
/// defaults to 1.
PqPowerExpr parse_pq_power(std::string_view text, const PqParams& params);

Rational eval_pq_power(const PqPowerExpr& e, const Rational& x);

/// Canonical-basis expansion of (γx ⊖ a)^n or (a ⊖ γx)^n, n >= 0.
Polynomial expand_pq_power(const Rational& a, long long n, const PqParams& params, const Rational& gamma = Rational(1),
                           Orientation orientation = Orientation::XMinusA);

/// coeff * expr
struct ScaledPower {
  Rational coeff;
  PqPowerExpr expr;

  Rational operator()(const Rational& x) const { return coeff * eval_pq_power(expr, x); }
};

/// One application of D_{p,q}, valid for every integer n:
///   D(γx ⊖ a)^n = γ[n] (γpx ⊖ a)^{n-1}
///   D(a ⊖ γx)^n = -γ[n] (a ⊖ γqx)^{n-1}
ScaledPower derive_pq_power(const PqPowerExpr& e);

/// D^k (x ⊖ a)^n = p^{C(k,2)} [n]!/[n-k]! (p^k x ⊖ a)^{n-k}, 0 <= k <= n.
ScaledPower derive_pq_power_k(const Rational& a, long long n, long long k, const PqParams& params);

/// D^k (a ⊖ x)^n = (-1)^k q^{C(k,2)} [n]!/[n-k]! (a ⊖ q^k x)^{n-k}, 0 <= k <= n.
ScaledPower derive_reversed_k(const Rational& a, long long n, long long k, const PqParams& params);

/// Whether (x⊖a)^{m+n} = (x⊖a)^m (p^m x ⊖ q^m a)^n holds exactly at x.
bool additive_law_check(const Rational& a, long long m, long long n, const PqParams& params, const Rational& x);

struct ReciprocalRules {
  bool forward_reciprocal;  ///< D 1/(x⊖a)^n = -q[n] / (qx⊖a)^{n+1}
  bool reversed;            ///< D (a⊖x)^n = -[n] (a⊖qx)^{n-1}
  bool reversed_reciprocal; ///< D 1/(a⊖x)^n = p[n] / (a⊖px)^{n+1}

  bool all() const { return forward_reciprocal && reversed && reversed_reciprocal; }
};

/// Checks the three rules at x by exact difference quotients.
ReciprocalRules reciprocal_rules_check(const Rational& a, long long n, const PqParams& params, const Rational& x);

}  // namespace pq
