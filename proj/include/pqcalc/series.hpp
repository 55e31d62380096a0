#pragma once

#include <functional>

namespace pq {

struct TruncationPolicy {
  long max_terms = 10000;
  /// Absolute bound on a term's magnitude for the scan to count as converged.
  double tail_tol = 1e-12;
  /// This many consecutive non-decreasing term magnitudes mean divergence.
  long divergence_window = 8;

  /// Throws Error(InvalidPolicy) unless max_terms >= 1, tail_tol > 0 and
  /// divergence_window >= 2.
  void validate() const;
};

enum class SeriesStatus { Converged, MaxTermsReached, DivergenceDetected };

const char* to_string(SeriesStatus status) noexcept;

/// Worse of two statuses: DivergenceDetected > MaxTermsReached > Converged.
SeriesStatus worse(SeriesStatus a, SeriesStatus b) noexcept;

struct SeriesSum {
  double value = 0.0;
  long terms_used = 0;
  /// Magnitude of the last included term.
  double tail_estimate = 0.0;
  SeriesStatus status = SeriesStatus::Converged;
};

/// Sums term(0) + term(1) + ... with early exit.
///
/// Stops as Converged once two consecutive terms are at most tail_tol in
/// magnitude, as DivergenceDetected after divergence_window consecutive
/// non-decreasing magnitudes above tail_tol or on a non-finite term, and as
/// MaxTermsReached otherwise.
SeriesSum sum_series(const std::function<double(long)>& term, const TruncationPolicy& policy);

}  // namespace pq
