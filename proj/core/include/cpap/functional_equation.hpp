#pragma once

// Residuals of the functional equations satisfied by cluster series.
//
//   onem(m):  T(x) - 1 - A(x) T(x/(1+x^{m-2}))
//   15243:    x^3 T'(x) - 1 - x + T(x/(1+x^2))
//
// The residual is formed in truncated arithmetic; a value above the series
// order means it vanishes to that order.

#include "cpap/cluster.hpp"

namespace cpap {

TruncatedSeries functional_equation_residual(const SignedClusterSeries& t, const OverlapFamily& family);

/// Valuation of the residual; no-known-equation error for other families.
std::size_t verify_functional_equation(const SignedClusterSeries& t, const OverlapFamily& family);

}  // namespace cpap
