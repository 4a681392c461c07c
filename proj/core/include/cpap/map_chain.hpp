#pragma once

// The maps A(x) = x/(1+x) and B(x) = x/(1+x^{m-2}) and their iterates, and the
// cluster series obtained by iterating T(x) = 1 + A(x) T(B(x)).

#include "cpap/cluster.hpp"
#include "cpap/series.hpp"

#include <vector>

namespace cpap {

class MapChain {
 public:
  /// m >= 4; series are kept to the given truncation order.
  MapChain(int m, std::size_t order);

  [[nodiscard]] int m() const noexcept { return m_; }
  [[nodiscard]] std::size_t order() const noexcept { return order_; }

  /// Exact rational maps.
  [[nodiscard]] Rational A(const Rational& x) const;
  [[nodiscard]] Rational B(const Rational& x) const;

  /// Series of B_j = B o B_{j-1}, B_0 = x (computed lazily and cached).
  const TruncatedSeries& B_series(std::size_t j);
  /// Series of A_j = A o B_j.
  [[nodiscard]] TruncatedSeries A_series(std::size_t j);

 private:
  int m_;
  std::size_t order_;
  std::vector<TruncatedSeries> B_;
};

/// T = 1 + sum_{n>=0} prod_{j=0}^{n} A_j(x), truncated at N. The n-th product
/// has valuation n+1, so only n < N contributes.
SignedClusterSeries iterate_T(int m, std::size_t N);

}  // namespace cpap
