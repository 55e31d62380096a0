#include <doctest.h>

#include <cmath>

#include "pqcalc/polynomial.hpp"

using pq::Polynomial;
using pq::PqParams;
using pq::Rational;

TEST_CASE("polynomial canonical form") {
  CHECK(Polynomial({Rational(1), Rational(0), Rational(0)}).degree() == 0);
  CHECK(Polynomial({Rational(0)}).is_zero());
  CHECK(Polynomial().degree() == Polynomial::kZeroDegree);
  CHECK(Polynomial().str() == "0");
  CHECK(Polynomial::parse("1,-1/2,0,3").str() == "1,-1/2,0,3");
  CHECK(Polynomial::parse("0,0").is_zero());
  CHECK_THROWS_AS(Polynomial::parse("1,,2"), pq::Error);
  CHECK_THROWS_AS(Polynomial::parse(""), pq::Error);
}

TEST_CASE("polynomial ring operations") {
  const auto f = Polynomial::parse("1,1");   // 1 + x
  const auto g = Polynomial::parse("-1,1");  // -1 + x
  CHECK((f * g) == Polynomial::parse("-1,0,1"));
  CHECK((f + g) == Polynomial::parse("0,2"));
  CHECK((f - f).is_zero());
  CHECK(f.scaled_argument(Rational(3)) == Polynomial::parse("1,3"));
  CHECK(Polynomial::monomial(3, Rational(2)) == Polynomial::parse("0,0,0,2"));
}

TEST_CASE("eval_poly") {
  CHECK(pq::eval_poly(Polynomial(), Rational(7, 3)) == 0);
  CHECK(pq::eval_poly(Polynomial::parse("1,0,1"), Rational(3, 2)) == Rational(13, 4));
  CHECK(pq::eval_poly(Polynomial::parse("0,1"), Rational(-5, 9)) == Rational(-5, 9));
  CHECK(pq::eval_poly(Polynomial::parse("1,0,1"), 1.5) == doctest::Approx(3.25));
}

TEST_CASE("pq_derive_poly") {
  const PqParams p21(Rational(2), Rational(1));
  CHECK(pq::pq_derive_poly(Polynomial::constant(Rational(5)), p21).is_zero());
  CHECK(pq::pq_derive_poly(Polynomial::parse("0,0,1"), p21) == Polynomial::parse("0,3"));
  CHECK(pq::pq_derive_poly(Polynomial::parse("0,2,0,1"), PqParams(Rational(3), Rational(2))) ==
        Polynomial::parse("2,0,19"));
}

TEST_CASE("pq_derive_poly agrees with the difference quotient") {
  const PqParams pq(Rational(5, 2), Rational(-1, 3));
  const auto f = Polynomial::parse("3,-1/2,4,0,7/5,1");
  const auto df = pq::pq_derive_poly(f, pq);
  for (const Rational x : {Rational(1), Rational(-2, 7), Rational(9, 4)}) {
    const auto h = [&](const Rational& t) { return f(t); };
    CHECK(pq::pq_difference_quotient(h, x, pq) == df(x));
  }
  CHECK_THROWS_AS(pq::pq_difference_quotient([&](const Rational& t) { return f(t); }, Rational(0), pq), pq::Error);
}

TEST_CASE("pq_derive_poly_k") {
  const PqParams pq(Rational(1, 2), Rational(3));
  const auto f = Polynomial::parse("1,2,3,4");
  CHECK(pq::pq_derive_poly_k(f, 0, pq) == f);
  CHECK(pq::pq_derive_poly_k(Polynomial::monomial(3), 3, pq) ==
        Polynomial::constant(pq::bracket(3, pq) * pq::bracket(2, pq)));
  CHECK(pq::pq_derive_poly_k(f, 4, pq).is_zero());
  CHECK(pq::pq_derive_poly_k(f, 2, pq) == pq::pq_derive_poly(pq::pq_derive_poly(f, pq), pq));
  CHECK_THROWS_AS(pq::pq_derive_poly_k(f, -1, pq), pq::Error);
}

TEST_CASE("pq_derive_fn") {
  const PqParams p21(Rational(2), Rational(1));
  const auto sq = pq::from_polynomial(Polynomial::parse("0,0,1"));
  CHECK(pq::pq_derive_fn(sq, 1.0, p21) == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(pq::pq_derive_fn(sq, 0.0, p21) == 0.0);
  const pq::NumericFn c{[](double) { return 4.0; }, std::nullopt};
  CHECK(pq::pq_derive_fn(c, 0.7, p21) == 0.0);

  const PqParams ln_pq(Rational(2), Rational(1, 2));
  const pq::NumericFn ln{[](double x) { return std::log(x); }, std::nullopt};
  CHECK(std::abs(pq::pq_derive_fn(ln, 2.0, ln_pq) - 0.46209812037329687294) < 1e-14);
}

TEST_CASE("pq_derive_fn at zero") {
  const PqParams pq(Rational(3), Rational(1, 2));
  const pq::NumericFn sin_fn{[](double x) { return std::sin(x); }, std::nullopt};
  CHECK(pq::pq_derive_fn(sin_fn, 0.0, pq) == doctest::Approx(1.0).epsilon(1e-8));
  const pq::NumericFn given{[](double x) { return std::sin(x); }, 0.25};
  CHECK(pq::pq_derive_fn(given, 0.0, pq) == 0.25);
  const pq::NumericFn cusp{[](double x) { return std::sqrt(std::abs(x)); }, std::nullopt};
  try {
    pq::pq_derive_fn(cusp, 0.0, pq);
    FAIL("expected an error");
  } catch (const pq::Error& e) {
    CHECK(e.code() == pq::ErrorCode::MissingDerivativeAtZero);
  }
}
