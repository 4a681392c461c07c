#include "cpap/errors.hpp"
#include "cpap/pattern.hpp"

#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

using namespace cpap;

TEST_CASE("standardize ranks distinct values") {
  CHECK(standardize(std::vector<long>{5, 2, 3}).str() == "312");
  CHECK(standardize(std::vector<long>{1, 2, 3}).str() == "123");
  CHECK(standardize(std::vector<long>{15, 3, 9, 7}).str() == "4132");
  CHECK_THROWS_AS(standardize(std::vector<long>{4, 1, 4}), Error);
}

TEST_CASE("occurrence scanning") {
  const auto host = Permutation::parse("15234");
  const auto pat = Pattern::parse("312");
  const auto classical = occurrences(host, pat, OccurrenceMode::classical);
  CHECK(classical.count == 3);
  CHECK(classical.index_sets.size() == 3);
  CHECK(classical.index_sets.front() == std::vector<std::size_t>{1, 2, 3});
  CHECK(occurrences(host, pat, OccurrenceMode::consecutive).count == 1);
  // 3412 is sometimes quoted as avoiding 312 consecutively, but its last three
  // entries 412 are an occurrence, and 312 occurs classically twice (312, 412).
  const auto p3412 = Permutation::parse("3412");
  CHECK(occurrences(p3412, pat, OccurrenceMode::consecutive).count == 1);
  CHECK(occurrences(p3412, pat, OccurrenceMode::classical).count == 2);
  CHECK(occurrences(Permutation::parse("3421"), pat, OccurrenceMode::consecutive).count == 0);
  CHECK(occurrences(Permutation::parse("12"), pat, OccurrenceMode::classical).count == 0);
}

TEST_CASE("parse rejects non-bijections") {
  CHECK_THROWS_AS(Pattern::parse("1224"), Error);
  CHECK_THROWS_AS(Pattern::parse("125"), Error);
  CHECK(Pattern::parse("1,4,2,3") == Pattern::parse("1423"));
  CHECK(Permutation::parse("10,1,2,3,4,5,6,7,8,9").str() == "10,1,2,3,4,5,6,7,8,9");
}

TEST_CASE("symmetries") {
  CHECK(reverse(Pattern::parse("1423")).str() == "3241");
  CHECK(complement(Pattern::parse("1234")).str() == "4321");
  CHECK(complement(reverse(Pattern::parse("1243"))).str() == "2134");
}

TEST_CASE("consecutive occurrences never exceed classical ones") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> host(7);
    std::iota(host.begin(), host.end(), 1);
    std::shuffle(host.begin(), host.end(), rng);
    std::vector<int> pat(3);
    std::iota(pat.begin(), pat.end(), 1);
    std::shuffle(pat.begin(), pat.end(), rng);
    const Permutation h(host);
    const Pattern p(pat);
    CHECK(occurrences(h, p, OccurrenceMode::consecutive).count <= occurrences(h, p, OccurrenceMode::classical).count);
    CHECK(occurrences(h, p, OccurrenceMode::consecutive).count == consecutive_starts(h.elems(), p).size());
  }
}
