#pragma once

// Growth constant kappa and amplitude C in c_n ~ C n! kappa^n, estimated from
// exact counts by ratio extrapolation and differential approximants.

#include "cpap/class_registry.hpp"
#include "cpap/series.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace cpap {

/// b_n = c_n/n! exactly, and r_n = b_n/b_{n-1} (r_0 unused) at `digits`
/// decimal digits.
struct RatioSequence {
  std::vector<Rational> b;
  std::vector<BigFloat> r;
  unsigned digits = 50;

  static RatioSequence from_counts(const CountSeries& counts, unsigned digits = 50);
  static RatioSequence from_egf(std::vector<Rational> b, unsigned digits = 50);
  [[nodiscard]] std::size_t order() const { return b.empty() ? 0 : b.size() - 1; }
};

struct AsymptoticEstimate {
  std::optional<BigFloat> kappa;
  std::optional<BigFloat> amplitude;
  int stable_digits_kappa = 0;
  int stable_digits_amplitude = 0;
  std::string method;
  unsigned precision = 0;  // decimal digits used
  std::size_t samples = 0; // approximants aggregated (differential approximants only)
};

/// Neville table in 1/n over the last depth+1 ratios; kappa is the deepest
/// diagonal before the diagonal differences stop shrinking. Non-convergence
/// error (message holds the diagonal) when not even one digit is stable.
AsymptoticEstimate ratio_extrapolate(const RatioSequence& rs, int depth);

struct ApproximantOptions {
  bool inhomogeneous = true;
  /// Trailing equations kept out of the solve; they only gate term counts.
  std::size_t holdout = 5;
  /// Accepted singularity window and angle.
  double window_low = 1.0;
  double window_high = 1.28;
  double max_arg = 1e-6;
};

/// For each d in degrees: fits Q_K F^{(K)} + ... + Q_0 F = P, all of degree d,
/// to F = sum b_n x^n exactly, takes the smallest real root of Q_K inside the
/// window, and reports 1/root. The median over the grid is the estimate;
/// stable digits come from the spread. Non-convergence error when no grid
/// point yields a root in the window.
AsymptoticEstimate differential_approximant(const RatioSequence& rs, int K, const std::vector<int>& degrees,
                                            const ApproximantOptions& options = {});

/// Richardson table in 1/n on b_n / kappa^n.
AsymptoticEstimate amplitude(const RatioSequence& rs, const BigFloat& kappa, int depth = 8);

struct AsymptoticsConfig {
  unsigned digits = 50;        // starting precision; doubled until stable digits settle
  unsigned max_digits = 400;
  std::vector<int> orders{1, 2};
  std::vector<int> degrees;    // empty: chosen from the series length
  int ratio_depth = 8;
  int amplitude_depth = 8;
};

/// Differential approximants over every order in cfg.orders (pooled median),
/// followed by the amplitude, with the precision ladder applied.
AsymptoticEstimate estimate_growth(const CountSeries& counts, const AsymptoticsConfig& cfg = {});

/// Degree grid used when AsymptoticsConfig::degrees is empty.
std::vector<int> default_degree_grid(std::size_t order, int K, const ApproximantOptions& options = {});

/// Number of leading significant digits on which a and b agree; `cap` when
/// they are equal.
int agreeing_digits(const BigFloat& a, const BigFloat& b, int cap = 1000);

/// Decimal text with `digits` significant digits.
std::string format_decimal(const BigFloat& value, int digits);

/// Reference 19-digit kappa and 16/17-digit amplitude for every class.
struct ReferenceConstants {
  std::string kappa;
  std::string amplitude;
};
ReferenceConstants reference_constants(const ClassId& id);

struct GrowthRow {
  ClassId id;
  AsymptoticEstimate estimate;
};
std::string growth_csv(const std::vector<GrowthRow>& rows);
nlohmann::json growth_json(const std::vector<GrowthRow>& rows);

}  // namespace cpap
