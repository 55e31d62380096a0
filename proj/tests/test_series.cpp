#include <doctest.h>

#include <cmath>
#include <limits>

#include "pqcalc/series.hpp"
#include "pqcalc/error.hpp"

using pq::SeriesStatus;
using pq::TruncationPolicy;

TEST_CASE("policy validation") {
  CHECK_NOTHROW(TruncationPolicy{}.validate());
  CHECK_THROWS_AS((TruncationPolicy{0, 1e-12, 8}).validate(), pq::Error);
  CHECK_THROWS_AS((TruncationPolicy{10, 0.0, 8}).validate(), pq::Error);
  CHECK_THROWS_AS((TruncationPolicy{10, 1e-12, 1}).validate(), pq::Error);
}

TEST_CASE("geometric series converges") {
  const auto s = pq::sum_series([](long k) { return std::pow(0.5, k); }, {});
  CHECK(s.status == SeriesStatus::Converged);
  CHECK(s.value == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(s.tail_estimate <= 1e-12);
}

TEST_CASE("constant terms diverge within the window") {
  const auto s = pq::sum_series([](long) { return 1.0; }, {});
  CHECK(s.status == SeriesStatus::DivergenceDetected);
  CHECK(s.terms_used <= 8);
}

TEST_CASE("slow decay hits max_terms") {
  const auto s = pq::sum_series([](long k) { return 1.0 / double(k + 1); }, {50, 1e-12, 8});
  CHECK(s.status == SeriesStatus::MaxTermsReached);
  CHECK(s.terms_used == 50);
}

TEST_CASE("non-finite terms count as divergence") {
  const auto s = pq::sum_series([](long k) { return k == 3 ? std::numeric_limits<double>::infinity() : 0.5; }, {});
  CHECK(s.status == SeriesStatus::DivergenceDetected);
  CHECK(std::isfinite(s.value));
}

TEST_CASE("status ordering") {
  CHECK(pq::worse(SeriesStatus::Converged, SeriesStatus::MaxTermsReached) == SeriesStatus::MaxTermsReached);
  CHECK(pq::worse(SeriesStatus::DivergenceDetected, SeriesStatus::MaxTermsReached) == SeriesStatus::DivergenceDetected);
  CHECK(std::string(pq::to_string(SeriesStatus::DivergenceDetected)) == "divergent");
}
