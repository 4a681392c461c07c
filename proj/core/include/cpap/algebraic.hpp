#pragma once

// Algebraic witnesses P(x, T) = 0 for tree-family cluster series, and the
// hypergeometric closed form of those series.

#include "cpap/series.hpp"

#include <string>
#include <vector>

namespace cpap {

/// P(x, T) = sum_i coeffs[i](x) T^i.
struct AlgebraicWitness {
  std::string name;
  std::vector<Polynomial> coeffs;

  [[nodiscard]] std::size_t degree_in_T() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
};

/// Printed polynomials for the patterns 1 3 4 ... (m-1) 2 m, m in {4, 5, 6, 7};
/// domain error otherwise.
AlgebraicWitness tree_witness(int m);

struct AlgebraicCheck {
  std::size_t valuation;  // of P(x, T) truncated at the series order
  std::size_t order;
  [[nodiscard]] bool passed() const { return valuation > order; }
};

/// Exact substitution with truncated arithmetic. Every coefficient through
/// the series order is exact, so a true root leaves a zero residual.
AlgebraicCheck algebraic_verify(const AlgebraicWitness& witness, const TruncatedSeries& series);

/// x * pFq(1/(m-2), ..., (m-3)/(m-2); 2/(m-3), ..., (m-4)/(m-3), (m-2)/(m-3);
///         -(m-2)^{m-2}/(m-3)^{m-3} x^{m-2}) through order N, m >= 5.
TruncatedSeries hypergeometric_series(int m, std::size_t N);

/// (1 + 2x - G) / (1 + x - G) with G from hypergeometric_series.
TruncatedSeries hypergeometric_T(int m, std::size_t N);

}  // namespace cpap
