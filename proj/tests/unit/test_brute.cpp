#include "cpap/brute.hpp"
#include "cpap/class_registry.hpp"
#include "cpap/errors.hpp"
#include "cpap/numeric.hpp"

#include "doctest.h"

using namespace cpap;

TEST_CASE("brute_count examples") {
  CHECK(brute_count(Pattern::parse("1234"), 4) == 23);
  CHECK(brute_count(Pattern::parse("1423"), 3) == 6);
  CHECK(brute_count(Pattern::parse("1423"), 5) == 110);
  CHECK_THROWS_AS(brute_count(Pattern::parse("1423"), 13), Error);
}

TEST_CASE("brute_count symmetry and small n") {
  for (const auto& id : all_classes()) {
    const Pattern pat = canonical_representative(id);
    const auto m = static_cast<unsigned>(pat.size());
    for (unsigned n = 0; n < m; ++n) CHECK(brute_count(pat, n) == factorial(n));
    CHECK(brute_count(pat, m) == factorial(m) - 1);
    CHECK(brute_count(reverse(pat), 7) == brute_count(pat, 7));
    CHECK(brute_count(complement(pat), 7) == brute_count(pat, 7));
  }
}

TEST_CASE("brute_clusters examples") {
  const auto pat = Pattern::parse("1423");
  CHECK(brute_clusters(pat, 6, 2) == 1);
  CHECK(brute_clusters(pat, 4, 1) == 1);
  CHECK(brute_clusters(pat, 7, 2) == 4);
  CHECK(brute_clusters(pat, 1, 0) == 1);
  for (unsigned n = 2; n < 4; ++n) {
    for (unsigned k = 0; k < 3; ++k) CHECK(brute_clusters(pat, n, k) == 0);
  }
  CHECK(is_marked_cluster(Permutation::parse("162534").elems(), pat, std::vector<std::size_t>{0, 2}));
  CHECK(is_marked_cluster(Permutation::parse("1523746").elems(), pat, std::vector<std::size_t>{0, 3}));
}

TEST_CASE("marked clusters differ from covered permutations for 15243") {
  // 152739486 style overlaps: three occurrences at distance two can also be
  // marked as the outer pair, which the literal count misses.
  const auto pat = Pattern::parse("15243");
  const auto marked = brute_cluster_row(pat, 9);
  const auto literal = brute_covered_permutation_row(pat, 9);
  CHECK(marked[2] == 15);
  CHECK(literal[2] == 14);
  CHECK(marked[3] == 1);
  for (const char* text : {"1423", "14523", "13425", "15423", "15234"}) {
    const auto p = Pattern::parse(text);
    CHECK(brute_cluster_row(p, 9) == brute_covered_permutation_row(p, 9));
  }
}
