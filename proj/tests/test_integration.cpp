#include <doctest.h>

#include <cmath>

#include "pqcalc/integration.hpp"

using pq::NumericFn;
using pq::Polynomial;
using pq::PqParams;
using pq::Rational;
using pq::SeriesStatus;

namespace {

NumericFn poly_fn(const char* text) { return pq::from_polynomial(Polynomial::parse(text)); }

NumericFn fn(double (*f)(double)) { return {f, std::nullopt}; }

const PqParams kHalf(Rational(1), Rational(1, 2));

double witness(double x) { return x <= 1.0 ? x : std::pow(x, -3.0); }

}  // namespace

TEST_CASE("antiderive_poly") {
  const PqParams p21(Rational(2), Rational(1));
  CHECK(pq::antiderive_poly(Polynomial(), p21).is_zero());
  CHECK(pq::antiderive_poly(Polynomial::parse("0,1"), p21) == Polynomial::parse("0,0,1/3"));
  const PqParams pq(Rational(5, 2), Rational(-1, 3));
  const auto f = Polynomial::parse("1,0,1");
  const auto F = pq::antiderive_poly(f, pq, Rational(4));
  CHECK(F == Polynomial({Rational(4), Rational(1), Rational(0), Rational(1) / pq::bracket(3, pq)}));
  CHECK(pq::pq_derive_poly(F, pq) == f);
}

TEST_CASE("integral_zero_to closed forms") {
  auto r = pq::integral_zero_to(poly_fn("3/2"), 1.0, kHalf);
  CHECK(r.status == SeriesStatus::Converged);
  CHECK(std::abs(r.value - 1.5) < 1e-10);
  r = pq::integral_zero_to(poly_fn("0,1"), 1.0, kHalf);
  CHECK(std::abs(r.value - 2.0 / 3.0) < 1e-10);
  CHECK(r.tail_estimate <= 1e-12);
  CHECK(r.regime == pq::Regime::RatioLtOne);
  CHECK(pq::integral_zero_to(poly_fn("0,1"), 0.0, kHalf).value == 0.0);
}

TEST_CASE("integral_zero_to errors") {
  const auto f = poly_fn("1");
  try {
    pq::integral_zero_to(f, 1.0, PqParams(Rational(1, 2), Rational(-1, 2)));
    FAIL("expected an error");
  } catch (const pq::Error& e) {
    CHECK(e.code() == pq::ErrorCode::DegenerateRegime);
  }
  try {
    pq::integral_zero_to(f, -1.0, kHalf);
    FAIL("expected an error");
  } catch (const pq::Error& e) {
    CHECK(e.code() == pq::ErrorCode::InvalidInterval);
  }
}

TEST_CASE("1/x diverges") {
  const auto r = pq::integral_zero_to(fn([](double x) { return 1.0 / x; }), 1.0, PqParams(Rational(2), Rational(1)));
  CHECK(r.status == SeriesStatus::DivergenceDetected);
  CHECK(r.terms_used <= 64);
}

TEST_CASE("partial sums against exact values") {
  const auto f = Polynomial::parse("0,1");
  const Rational exact = pq::integral_zero_to_partial(f, Rational(1), kHalf, 200);
  const auto r = pq::integral_zero_to(pq::from_polynomial(f), 1.0, kHalf);
  CHECK(std::abs(exact.to_double() - r.value) < 1e-12);
  const auto terms = pq::integral_zero_to_terms(pq::from_polynomial(f), 1.0, kHalf, 3);
  REQUIRE(terms.size() == 3);
  CHECK(terms[0] == doctest::Approx(0.5));
  CHECK(terms[1] == doctest::Approx(0.125));
  // 4 terms of (1/2)*x_k*x_k, x_k = 2^-k: exact partial sum
  CHECK(pq::integral_zero_to_partial(f, Rational(1), kHalf, 4) == Rational(1, 2) * (Rational(1) + Rational(1, 4) + Rational(1, 16) + Rational(1, 64)));
}

TEST_CASE("definite integrals") {
  CHECK(pq::integral(poly_fn("0"), 0.0, 5.0, kHalf).value == 0.0);
  const auto r = pq::integral(poly_fn("0,0,1"), 1.0, 2.0, kHalf);
  CHECK(std::abs(r.value - 4.0) < 1e-9);
  const auto d = pq::integral(pq::from_polynomial(pq::pq_derive_poly(Polynomial::parse("0,0,0,1"), kHalf)), 1.0, 2.0,
                              kHalf);
  CHECK(std::abs(d.value - 7.0) < 1e-9);
  CHECK_THROWS_AS(pq::integral(poly_fn("1"), 2.0, 1.0, kHalf), pq::Error);
  CHECK_THROWS_AS(pq::integral(poly_fn("1"), -1.0, 1.0, kHalf), pq::Error);
}

TEST_CASE("monomial law in both regimes") {
  for (const auto& pq : {PqParams(Rational(2), Rational(1)), PqParams(Rational(1), Rational(3))}) {
    for (int n = 0; n <= 6; ++n) {
      const auto f = pq::from_polynomial(Polynomial::monomial(n));
      const auto r = pq::integral_zero_to(f, 2.0, pq);
      const double expect = std::pow(2.0, n + 1) / pq::bracket(n + 1, pq).to_double();
      CHECK(std::abs(r.value - expect) < 1e-9);
      CHECK(r.terms_used <= 500);
    }
  }
}

TEST_CASE("regime symmetry") {
  const PqParams pq(Rational(3), Rational(1, 2));
  const auto f = poly_fn("1,-2,0,5/3");
  CHECK(std::abs(pq::integral_zero_to(f, 1.5, pq).value - pq::integral_zero_to(f, 1.5, pq.swapped()).value) < 1e-10);
  CHECK(pq::integral_zero_to(f, 1.5, pq.swapped()).regime == pq::Regime::RatioGtOne);
}

TEST_CASE("improper integrals") {
  const auto zero = pq::integral_improper(poly_fn("0"), kHalf);
  CHECK(zero.value == 0.0);
  CHECK(zero.status == SeriesStatus::Converged);

  const auto f = fn(witness);
  const auto whole = pq::integral_improper(f, kHalf);
  const auto left = pq::integral_zero_to(f, 1.0, kHalf);
  const auto right = pq::integral_to_infinity(f, 1.0, kHalf);
  CHECK(whole.status == SeriesStatus::Converged);
  CHECK(left.status == SeriesStatus::Converged);
  CHECK(right.status == SeriesStatus::Converged);
  CHECK(std::abs(whole.value - 5.0 / 6.0) < 1e-10);
  CHECK(std::abs(left.value - 2.0 / 3.0) < 1e-10);
  CHECK(std::abs(right.value - 1.0 / 6.0) < 1e-10);
  CHECK(std::abs(whole.value - (left.value + right.value)) <= 2e-12);

  const auto cube = pq::integral_to_infinity(fn([](double x) { return std::pow(x, -3.0); }), 1.0, kHalf);
  CHECK(cube.status == SeriesStatus::Converged);
  CHECK(std::abs(cube.value - 1.0 / 6.0) < 1e-10);

  CHECK(pq::integral_improper(poly_fn("1"), kHalf).status == SeriesStatus::DivergenceDetected);
  CHECK(pq::integral_to_infinity(poly_fn("0"), 1.0, kHalf).value == 0.0);
  CHECK_THROWS_AS(pq::integral_to_infinity(poly_fn("1"), 0.0, kHalf), pq::Error);
}

TEST_CASE("riemann-stieltjes") {
  const PqParams pq(Rational(2), Rational(1, 2));
  const auto f = poly_fn("1,0,1");
  CHECK(pq::integral_riemann_stieltjes(f, poly_fn("5"), 1.0, pq).value == 0.0);
  const auto rs = pq::integral_riemann_stieltjes(f, poly_fn("0,1"), 1.5, pq);
  CHECK(std::abs(rs.value - pq::integral_zero_to(f, 1.5, pq).value) < 1e-10);
  const auto tele = pq::integral_riemann_stieltjes(poly_fn("1"), poly_fn("3,0,1"), 2.0, pq);
  CHECK(std::abs(tele.value - 4.0) < 1e-10);
  try {
    pq::integral_riemann_stieltjes(f, f, 1.0, pq.swapped());
    FAIL("expected an error");
  } catch (const pq::Error& e) {
    CHECK(e.code() == pq::ErrorCode::WrongRegime);
  }
}

TEST_CASE("convergence hypothesis heuristic") {
  const PqParams pq(Rational(2), Rational(1));
  const auto one = pq::check_convergence_hypothesis(poly_fn("1"), 2.0, 0.5, 32, pq);
  CHECK(one.bounded);
  CHECK(one.observed_bound == doctest::Approx(std::sqrt(2.0)));
  for (const double alpha : {0.0, 0.25, 0.5, 0.75})
    CHECK_FALSE(pq::check_convergence_hypothesis(fn([](double x) { return 1.0 / x; }), 1.0, alpha, 32, pq).bounded);
  CHECK(pq::check_convergence_hypothesis(fn([](double x) { return std::pow(x, -0.25); }), 1.0, 0.5, 32, pq).bounded);
  CHECK_THROWS_AS(pq::check_convergence_hypothesis(poly_fn("1"), 1.0, 1.0, 32, pq), pq::Error);
  CHECK_THROWS_AS(pq::check_convergence_hypothesis(poly_fn("1"), 1.0, 0.5, 4, pq), pq::Error);
}

TEST_CASE("fundamental theorem") {
  const auto c = pq::newton_leibniz_check(poly_fn("3"), 1.0, 2.0, kHalf);
  CHECK(c.lhs == 0.0);
  CHECK(c.rhs == 0.0);
  const auto cube = pq::newton_leibniz_check(poly_fn("0,0,0,1"), 1.0, 2.0, kHalf);
  CHECK(cube.gap < 1e-9);
  CHECK(cube.rhs == 7.0);
  const auto from0 = pq::newton_leibniz_check(poly_fn("1,2,0,-1"), 0.0, 1.5, PqParams(Rational(3), Rational(1, 2)));
  CHECK(from0.gap < 1e-9);
}

TEST_CASE("integration by parts") {
  const auto x = poly_fn("0,1");
  const auto x2 = poly_fn("0,0,1");
  const auto r = pq::integrate_by_parts(x, x2, 0.0, 1.0, kHalf);
  // lhs = p[2]/[3], rhs = 1 - q^2/[3]
  const double b3 = 1.75;
  CHECK(std::abs(r.lhs - 1.5 / b3) < 1e-9);
  CHECK(std::abs(r.rhs - (1.0 - 0.25 / b3)) < 1e-9);
  CHECK(r.gap < 1e-9);
  const auto r2 = pq::integrate_by_parts(x2, poly_fn("0,0,0,1"), 1.0, 2.0, PqParams(Rational(5, 2), Rational(1, 3)));
  CHECK(r2.gap < 1e-8);
  // f = 1 reduces to the fundamental theorem for g
  const auto r3 = pq::integrate_by_parts(poly_fn("1"), x2, 1.0, 2.0, kHalf);
  CHECK(std::abs(r3.lhs - pq::newton_leibniz_check(x2, 1.0, 2.0, kHalf).lhs) < 1e-12);
}
