#include "cpap/modular.hpp"

#include "doctest.h"

using namespace cpap;
using namespace cpap::modular;

TEST_CASE("primes and inverses") {
  CHECK(is_prime(2));
  CHECK(is_prime(1'000'000'007ULL));
  CHECK_FALSE(is_prime(1'000'000'007ULL * 3));
  CHECK_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2,3,5,7
  const auto ps = large_primes(4);
  REQUIRE(ps.size() == 4);
  for (u64 p : ps) {
    CHECK(is_prime(p));
    CHECK(p < (u64{1} << 62U));
    CHECK(mul_mod(inv_mod(12345, p), 12345, p) == 1);
  }
  CHECK(ps[0] > ps[1]);
}

TEST_CASE("crt reconstructs big integers") {
  const Integer big = factorial(60) + 12345;
  const auto ps = primes_exceeding(big);
  std::vector<u64> res;
  for (u64 p : ps) res.push_back(reduce(big, p));
  CHECK(crt(res, ps) == big);
  CHECK(reduce(Integer(5), 3) == 2);
}
