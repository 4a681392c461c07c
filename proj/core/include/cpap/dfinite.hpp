#pragma once

// Guessing linear ODEs with polynomial coefficients from series prefixes.

#include "cpap/ode.hpp"

#include <optional>

namespace cpap {

struct FitOptions {
  /// Trailing coefficient equations withheld from the solve and used only to
  /// confirm the candidate.
  std::size_t holdout = 10;
};

/// Sweeps (r, d), r <= max_order, d <= max_degree, in increasing r+d with
/// smaller r first, and returns the first operator whose fitted coefficients
/// also annihilate the held-out equations, content-normalized, with initial
/// values read from the series. Budget error when the sweep reaches a pair
/// whose system is too small to leave `holdout` checks; nullopt when the
/// sweep is exhausted.
std::optional<LinearODE> dfinite_fit(const TruncatedSeries& series, int max_order, int max_degree,
                                     const FitOptions& options = {});

/// Number of coefficient equations (rows) available for order r.
std::size_t fit_equation_count(const TruncatedSeries& series, int r);

}  // namespace cpap
