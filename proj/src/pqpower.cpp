#include "pqcalc/pqpower.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace pq {

const char* to_string(Orientation o) noexcept { return o == Orientation::XMinusA ? "x-a" : "a-x"; }

namespace {

Rational reciprocal_or_pole(const Rational& value) {
  if (value.is_zero()) throw Error(ErrorCode::PoleAtPoint, "(p,q)-power denominator vanishes");
  return Rational(1) / value;
}

// prod_{j<k} [n - j]  ==  [n]!/[n-k]!
Rational falling_bracket(long long n, long long k, const PqParams& params) {
  Rational out(1);
  for (long long j = 0; j < k; ++j) out *= bracket(n - j, params);
  return out;
}

}  // namespace

Rational pq_power_value(const Rational& u, const Rational& v, long long n, const PqParams& params) {
  const auto& p = params.p();
  const auto& q = params.q();
  if (n < 0) {
    const long long m = -n;
    return reciprocal_or_pole(pq_power_value(p.pow(-m) * u, q.pow(-m) * v, m, params));
  }
  Rational out(1);
  Rational pj(1);
  Rational qj(1);
  for (long long j = 0; j < n; ++j) {
    out *= pj * u - qj * v;
    pj *= p;
    qj *= q;
  }
  return out;
}

std::string PqPowerExpr::str() const {
  std::ostringstream os;
  os << (orientation == Orientation::XMinusA ? "pqpow" : "pqpowrev") << "(a=" << a << ", n=" << n
     << ", gamma=" << gamma << ")";
  return os.str();
}

PqPowerExpr parse_pq_power(std::string_view text, const PqParams& params) {
  auto fail = [&] { return Error(ErrorCode::Parse, "not a (p,q)-power expression: '" + std::string(text) + "'"); };
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  Orientation orientation;
  std::string rest;
  if (s.rfind("pqpowrev(", 0) == 0) {
    orientation = Orientation::AMinusX;
    rest = s.substr(9);
  } else if (s.rfind("pqpow(", 0) == 0) {
    orientation = Orientation::XMinusA;
    rest = s.substr(6);
  } else {
    throw fail();
  }
  if (rest.empty() || rest.back() != ')') throw fail();
  rest.pop_back();

  std::map<std::string, std::string> fields;
  std::istringstream in(rest);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw fail();
    if (!fields.emplace(item.substr(0, eq), item.substr(eq + 1)).second) throw fail();
  }
  if (!fields.contains("a") || !fields.contains("n")) throw fail();
  for (const auto& [key, _] : fields) {
    if (key != "a" && key != "n" && key != "gamma") throw fail();
  }
  const Rational n = Rational::parse(fields["n"]);
  if (!n.is_integer()) throw fail();
  return PqPowerExpr{
      .gamma = fields.contains("gamma") ? Rational::parse(fields["gamma"]) : Rational(1),
      .a = Rational::parse(fields["a"]),
      .n = n.raw().get_num().get_si(),
      .orientation = orientation,
      .params = params,
  };
}

Rational eval_pq_power(const PqPowerExpr& e, const Rational& x) {
  if (e.orientation == Orientation::XMinusA) return pq_power_value(e.gamma * x, e.a, e.n, e.params);
  return pq_power_value(e.a, e.gamma * x, e.n, e.params);
}

Polynomial expand_pq_power(const Rational& a, long long n, const PqParams& params, const Rational& gamma,
                           Orientation orientation) {
  if (n < 0) throw Error(ErrorCode::NegativeArgument, "only nonnegative powers expand to polynomials");
  Polynomial out = Polynomial::constant(Rational(1));
  Rational pj(1);
  Rational qj(1);
  for (long long j = 0; j < n; ++j) {
    if (orientation == Orientation::XMinusA) {
      out *= Polynomial({-(qj * a), pj * gamma});
    } else {
      out *= Polynomial({pj * a, -(qj * gamma)});
    }
    pj *= params.p();
    qj *= params.q();
  }
  return out;
}

ScaledPower derive_pq_power(const PqPowerExpr& e) {
  if (e.n == 0) return {Rational(0), e};
  PqPowerExpr next = e;
  next.n = e.n - 1;
  Rational coeff = e.gamma * bracket(e.n, e.params);
  if (e.orientation == Orientation::XMinusA) {
    next.gamma = e.gamma * e.params.p();
  } else {
    next.gamma = e.gamma * e.params.q();
    coeff = -coeff;
  }
  return {coeff, next};
}

ScaledPower derive_pq_power_k(const Rational& a, long long n, long long k, const PqParams& params) {
  if (k < 0 || k > n) throw Error(ErrorCode::OutOfRange, "derivative order must satisfy 0 <= k <= n");
  return {params.p().pow(choose2(k)) * falling_bracket(n, k, params),
          PqPowerExpr{.gamma = params.p().pow(k), .a = a, .n = n - k, .orientation = Orientation::XMinusA,
                      .params = params}};
}

ScaledPower derive_reversed_k(const Rational& a, long long n, long long k, const PqParams& params) {
  if (k < 0 || k > n) throw Error(ErrorCode::OutOfRange, "derivative order must satisfy 0 <= k <= n");
  const Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
  return {sign * params.q().pow(choose2(k)) * falling_bracket(n, k, params),
          PqPowerExpr{.gamma = params.q().pow(k), .a = a, .n = n - k, .orientation = Orientation::AMinusX,
                      .params = params}};
}

bool additive_law_check(const Rational& a, long long m, long long n, const PqParams& params, const Rational& x) {
  const Rational lhs = pq_power_value(x, a, m + n, params);
  const Rational rhs =
      pq_power_value(x, a, m, params) * pq_power_value(params.p().pow(m) * x, params.q().pow(m) * a, n, params);
  return lhs == rhs;
}

ReciprocalRules reciprocal_rules_check(const Rational& a, long long n, const PqParams& params, const Rational& x) {
  if (n < 0) throw Error(ErrorCode::NegativeArgument, "reciprocal rules are stated for n >= 0");
  if (x.is_zero()) throw Error(ErrorCode::InvalidArgument, "rules are checked at x != 0");
  const auto& p = params.p();
  const auto& q = params.q();
  const Rational bn = bracket(n, params);

  const Rational d1 = pq_difference_quotient(
      [&](const Rational& y) { return reciprocal_or_pole(pq_power_value(y, a, n, params)); }, x, params);
  const Rational rhs1 = -q * bn * reciprocal_or_pole(pq_power_value(q * x, a, n + 1, params));

  const Rational d2 =
      pq_difference_quotient([&](const Rational& y) { return pq_power_value(a, y, n, params); }, x, params);
  const Rational rhs2 = n == 0 ? Rational(0) : -bn * pq_power_value(a, q * x, n - 1, params);

  const Rational d3 = pq_difference_quotient(
      [&](const Rational& y) { return reciprocal_or_pole(pq_power_value(a, y, n, params)); }, x, params);
  const Rational rhs3 = p * bn * reciprocal_or_pole(pq_power_value(a, p * x, n + 1, params));

  return {d1 == rhs1, d2 == rhs2, d3 == rhs3};
}

}  // namespace pq
