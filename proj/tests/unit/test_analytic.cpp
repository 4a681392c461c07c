#include "cpap/cluster.hpp"
#include "cpap/errors.hpp"
#include "cpap/functional_equation.hpp"
#include "cpap/map_chain.hpp"

#include "doctest.h"

using namespace cpap;

TEST_CASE("map chain basics") {
  MapChain chain(4, 8);
  CHECK(chain.B(Rational(-1)) == Rational(-1, 2));
  CHECK(chain.B(Rational(-1, 2)) == Rational(-2, 5));
  CHECK(chain.B(Rational(-2, 5)) == Rational(-10, 29));
  CHECK(chain.A(Rational(-1, 2)) == -1);
  CHECK(chain.A(Rational(-2, 5)) == Rational(-2, 3));
  CHECK(chain.A(Rational(-10, 29)) == Rational(-10, 19));
  CHECK(chain.B_series(0) == TruncatedSeries::x(8));
  const auto A1 = chain.A_series(1);
  CHECK(A1[1] == 1);
  CHECK(A1[2] == -1);
  CHECK_THROWS_AS(chain.A(Rational(-1)), Error);
}

TEST_CASE("iterated solution equals the cluster recurrences") {
  for (int m = 4; m <= 6; ++m) {
    const auto it = iterate_T(m, 40);
    CHECK(it == signed_sum(clusters_onem(m, 40)));
  }
  const auto t = iterate_T(4, 10);
  CHECK(t.t[1] == 1);
  CHECK(t.t[4] == -1);
}

TEST_CASE("functional equation residuals") {
  const std::size_t N = 30;
  for (int m = 4; m <= 6; ++m) {
    const auto t = signed_sum(clusters_onem(m, N));
    CHECK(verify_functional_equation(t, OverlapFamily::onem(m)) == N + 1);
    CHECK(verify_functional_equation(t, OverlapFamily::general(m, 0)) == N + 1);
  }
  const auto t15243 = signed_sum(clusters_15243(N));
  CHECK(t15243.t[9] == 14);
  CHECK(verify_functional_equation(t15243, OverlapFamily::p15243()) == N + 1);
  const auto wrong = signed_sum(clusters_15243(N, Shift15243::triple));
  CHECK(verify_functional_equation(wrong, OverlapFamily::p15243()) <= 7);
  // The 1423 series does not satisfy the m = 5 equation.
  CHECK(verify_functional_equation(signed_sum(clusters_onem(4, N)), OverlapFamily::onem(5)) < 10);
  CHECK_THROWS_AS(verify_functional_equation(t15243, OverlapFamily::p14523()), Error);
  CHECK_THROWS_AS(verify_functional_equation(t15243, OverlapFamily::general(5, 1)), Error);
}
