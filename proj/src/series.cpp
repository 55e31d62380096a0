#include "pqcalc/series.hpp"

#include <cmath>

#include "pqcalc/error.hpp"

namespace pq {

void TruncationPolicy::validate() const {
  if (max_terms < 1) throw Error(ErrorCode::InvalidPolicy, "max_terms must be >= 1");
  if (!(tail_tol > 0.0)) throw Error(ErrorCode::InvalidPolicy, "tail_tol must be > 0");
  if (divergence_window < 2) throw Error(ErrorCode::InvalidPolicy, "divergence_window must be >= 2");
}

const char* to_string(SeriesStatus status) noexcept {
  switch (status) {
    case SeriesStatus::Converged: return "converged";
    case SeriesStatus::MaxTermsReached: return "max_terms";
    case SeriesStatus::DivergenceDetected: return "divergent";
  }
  return "unknown";
}

SeriesStatus worse(SeriesStatus a, SeriesStatus b) noexcept {
  return static_cast<int>(a) > static_cast<int>(b) ? a : b;
}

namespace {

// Magnitudes equal up to rounding still count as non-decreasing.
constexpr double kGrowthSlack = 1e-12;

}  // namespace

SeriesSum sum_series(const std::function<double(long)>& term, const TruncationPolicy& policy) {
  policy.validate();
  SeriesSum out;
  out.status = SeriesStatus::MaxTermsReached;
  double previous = 0.0;
  long small_run = 0;
  long growth_run = 0;
  for (long k = 0; k < policy.max_terms; ++k) {
    const double t = term(k);
    if (!std::isfinite(t)) {
      out.status = SeriesStatus::DivergenceDetected;
      return out;
    }
    const double mag = std::fabs(t);
    out.value += t;
    out.terms_used = k + 1;
    out.tail_estimate = mag;

    small_run = mag <= policy.tail_tol ? small_run + 1 : 0;
    if (small_run >= 2) {
      out.status = SeriesStatus::Converged;
      return out;
    }

    if (k == 0 || mag <= policy.tail_tol) {
      growth_run = mag > policy.tail_tol ? 1 : 0;
    } else if (mag >= previous * (1.0 - kGrowthSlack)) {
      ++growth_run;
    } else {
      growth_run = 1;
    }
    if (growth_run >= policy.divergence_window) {
      out.status = SeriesStatus::DivergenceDetected;
      return out;
    }
    previous = mag;
  }
  return out;
}

}  // namespace pq
