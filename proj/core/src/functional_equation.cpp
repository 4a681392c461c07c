#include "cpap/functional_equation.hpp"

#include "cpap/errors.hpp"
#include "cpap/map_chain.hpp"

namespace cpap {

TruncatedSeries functional_equation_residual(const SignedClusterSeries& t, const OverlapFamily& family) {
  family.validate();
  const std::size_t N = t.order();
  const TruncatedSeries T = t.ogf();
  const bool onem = family.kind == OverlapFamily::Kind::onem_tail ||
                    (family.kind == OverlapFamily::Kind::greater_general && family.c == 0);
  if (onem) {
    MapChain chain(family.m, N);
    TruncatedSeries rhs = ps_mul(chain.A_series(0), ps_compose(T, chain.B_series(1)));
    rhs[0] += 1;
    return ps_sub(T, rhs);
  }
  if (family.kind == OverlapFamily::Kind::pat15243) {
    MapChain chain(4, N);  // x/(1+x^2)
    TruncatedSeries r = ps_compose(T, chain.B_series(1));
    // x^3 T'(x) needs t only up to n-2, so it is exact through order N.
    for (std::size_t n = 3; n <= N; ++n) r[n] += Rational(static_cast<long>(n - 2)) * T[n - 2];
    r[0] -= 1;
    if (N >= 1) r[1] -= 1;
    return r;
  }
  fail(ErrorKind::no_known_equation, "no functional equation known for " + family.str());
}

std::size_t verify_functional_equation(const SignedClusterSeries& t, const OverlapFamily& family) {
  return functional_equation_residual(t, family).valuation();
}

}  // namespace cpap
