#pragma once

// Avoider counts c_0..c_N for one consecutive pattern.
//
// count_series grows standardized prefixes one element at a time, so a single
// run yields every c_n up to N. A state is the relative order of the last L-1
// elements plus the number of older elements in each of the L value intervals
// that order cuts out. Weights are kept modulo several word-size primes and
// recombined at the end; see dp_enumerator.cpp for the transition layout.

#include "cpap/errors.hpp"
#include "cpap/pattern.hpp"
#include "cpap/series.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace cpap::dp {

inline constexpr std::size_t kMaxDpPatternLength = 6;

struct DpOptions {
  /// Peak bytes of state tables per worker; 0 disables the check.
  std::size_t memory_budget = std::size_t{3} << 30U;
  /// Primes are processed in parallel, one table set per worker.
  unsigned threads = 1;
};

/// Thrown when the budget stops the run early. partial holds c_0..c_M for the
/// longest M that fit.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, CountSeries partial)
      : Error(ErrorKind::budget, what), partial_(std::move(partial)) {}
  [[nodiscard]] const CountSeries& partial() const noexcept { return partial_; }

 private:
  CountSeries partial_;
};

CountSeries count_series(const Pattern& pat, unsigned N, const DpOptions& options = {});

/// c_0..c_N mod p.
std::vector<std::uint64_t> count_series_mod(const Pattern& pat, unsigned N, std::uint64_t p);

/// Same numbers through the fixed-length Frontier engine, one run per n.
/// Exact bigint weights; slow, used as a cross-check.
CountSeries count_series_reference(const Pattern& pat, unsigned N);

/// Number of states held after t placements: (L-1)! * C(t, L-1).
std::uint64_t state_count(std::size_t L, unsigned t);

/// Largest N whose tables stay inside budget_bytes (N itself if 0).
unsigned max_order_within_budget(std::size_t L, unsigned N, std::size_t budget_bytes);

}  // namespace cpap::dp
