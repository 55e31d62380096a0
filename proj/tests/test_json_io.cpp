#include <doctest.h>

#include "pqcalc/json_io.hpp"

using pq::Rational;

TEST_CASE("expansion json round trip") {
  const pq::PowerBasisExpansion e{Rational(-3, 4), pq::Orientation::AMinusX, {Rational(1), Rational(5, 4)}};
  const auto j = pq::to_json(e);
  CHECK(j["a"] == "-3/4");
  CHECK(j["orientation"] == "a-x");
  CHECK(j["coeffs"][1] == "5/4");
  CHECK(pq::expansion_from_json(nlohmann::json::parse(j.dump())) == e);
}

TEST_CASE("integral result json round trip") {
  pq::IntegralResult r;
  r.value = 0.6666666666666288;
  r.terms_used = 41;
  r.tail_estimate = 4.5e-13;
  r.regime = pq::Regime::RatioGtOne;
  r.status = pq::SeriesStatus::MaxTermsReached;
  const auto j = pq::to_json(r);
  CHECK(j["status"] == "max_terms");
  CHECK(j["regime"] == "gt1");
  const auto back = pq::integral_result_from_json(nlohmann::json::parse(j.dump()));
  CHECK(back.value == r.value);
  CHECK(back.terms_used == r.terms_used);
  CHECK(back.tail_estimate == r.tail_estimate);
  CHECK(back.regime == r.regime);
  CHECK(back.status == r.status);
}

TEST_CASE("malformed json") {
  CHECK_THROWS_AS(pq::expansion_from_json(nlohmann::json{{"a", "1"}}), pq::Error);
  CHECK_THROWS_AS(pq::expansion_from_json(nlohmann::json{{"a", "1"}, {"orientation", "up"}, {"coeffs", {"1"}}}),
                  pq::Error);
  CHECK_THROWS_AS(pq::integral_result_from_json(nlohmann::json{{"value", 1.0}}), pq::Error);
}
