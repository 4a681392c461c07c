#include "cpap/brute.hpp"
#include "cpap/cluster.hpp"
#include "cpap/dp_enumerator.hpp"
#include "cpap/errors.hpp"

#include "doctest.h"

#include <algorithm>
#include <sstream>

using namespace cpap;

namespace {

void check_against_brute(const ClusterTable& table, const Pattern& pat, std::size_t max_n) {
  for (std::size_t n = 1; n <= max_n; ++n) {
    const auto row = brute_cluster_row(pat, static_cast<unsigned>(n));
    const std::size_t width = std::max(row.size(), table.row(n).size());
    for (std::size_t k = 0; k < width; ++k) {
      const Integer expect = k < row.size() ? row[k] : Integer(0);
      CHECK_MESSAGE(table.at(n, k) == expect, table.descriptor(), " n=", n, " k=", k);
    }
  }
}

}  // namespace

TEST_CASE("1423 table") {
  const auto t = clusters_onem(4, 12);
  CHECK(t.at(1, 0) == 1);
  CHECK(t.at(2, 0) == 0);
  CHECK(t.at(3, 1) == 0);
  CHECK(t.at(4, 1) == 1);
  CHECK(t.at(6, 2) == 1);
  CHECK(t.at(7, 2) == 4);
  CHECK_THROWS_AS(clusters_onem(3, 5), Error);
}

TEST_CASE("representatives") {
  CHECK(OverlapFamily::onem(4).representative().str() == "1423");
  CHECK(OverlapFamily::onem(5).representative().str() == "15234");
  CHECK(OverlapFamily::general(5, 1).representative().str() == "15423");
  CHECK(OverlapFamily::general(6, 2).representative().str() == "165423");
  CHECK(OverlapFamily::tree_family(5).representative().str() == "13425");
  CHECK(OverlapFamily::tree_family(4).representative().str() == "1324");
  CHECK(OverlapFamily::tree_family(6).representative().str() == "134526");
  CHECK_THROWS_AS(OverlapFamily::general(5, 2).validate(), Error);
  CHECK_THROWS_AS(OverlapFamily::general(5, -1).validate(), Error);
}

TEST_CASE("general family reduces to the onem family at c = 0") {
  for (int m = 4; m <= 7; ++m) CHECK(clusters_general(m, 0, 30) == clusters_onem(m, 30));
}

TEST_CASE("tree coefficients") {
  const auto t = clusters_tree(5, 10);
  // Only one ternary tree with one node.
  CHECK(t.at(5, 1) == 1);
  // l = 2 run has 3 realizations: s_{8,2} = 3 s_{1,0}.
  CHECK(t.at(8, 2) == 3);
  const auto c = clusters_tree(4, 12);
  CHECK(c.at(4, 1) == 1);
  CHECK(c.at(6, 2) == 2);  // Catalan(2)
  CHECK(c.at(8, 3) == 5);  // Catalan(3)
}

TEST_CASE("recurrences match brute-force clusters") {
  const std::size_t n = 10;  // 11 is exercised by the acceptance suite
  for (const auto& fam : {OverlapFamily::onem(4), OverlapFamily::onem(5), OverlapFamily::general(5, 1),
                          OverlapFamily::general(6, 1), OverlapFamily::general(6, 2), OverlapFamily::tree_family(4),
                          OverlapFamily::tree_family(5), OverlapFamily::tree_family(6), OverlapFamily::p14523(),
                          OverlapFamily::p15243()}) {
    check_against_brute(clusters(fam, n), fam.representative(), n);
  }
}

TEST_CASE("the triple-step 15243 shift disagrees with brute force") {
  const auto wrong = clusters_15243(12, Shift15243::triple);
  const auto right = clusters_15243(12);
  CHECK(wrong.at(6, 1) == 3);
  CHECK(brute_clusters(Pattern::parse("15243"), 6, 1) == 0);
  CHECK(right.at(6, 1) == 0);
  CHECK(right.at(7, 2) == brute_clusters(Pattern::parse("15243"), 7, 2));
  CHECK(right.at(7, 2) == 1);
}

TEST_CASE("signed sums and inversion") {
  const auto t = signed_sum(clusters_onem(4, 12));
  CHECK(t.t[1] == 1);
  CHECK(t.t[2] == 0);
  CHECK(t.t[3] == 0);
  CHECK(t.t[4] == -1);
  const auto c = gj_invert(t, 12);
  CHECK(c.counts[4] == 23);
  CHECK(c == dp::count_series(Pattern::parse("1423"), 12));

  SignedClusterSeries trivial{{0, 1, 0, 0, 0, 0}, "none"};
  const auto all = gj_invert(trivial, 5);
  for (unsigned n = 0; n <= 5; ++n) CHECK(all.counts[n] == factorial(n));
  SignedClusterSeries bad{{0, 2, 0}, "bad"};
  CHECK_THROWS_AS(gj_invert(bad, 2), Error);
  CHECK(SignedClusterSeries::from_ogf(t.ogf(), "x") == t);
}

TEST_CASE("csv export") {
  std::ostringstream out;
  clusters_onem(4, 6).write_csv(out);
  CHECK(out.str() == "n,k,s\n1,0,1\n4,1,1\n6,2,1\n");
}

TEST_CASE("family descriptors and class lookup") {
  CHECK(OverlapFamily::parse("general:6:2") == OverlapFamily::general(6, 2));
  CHECK(OverlapFamily::parse("tree:5") == OverlapFamily::tree_family(5));
  CHECK(OverlapFamily::parse("15243") == OverlapFamily::p15243());
  CHECK_THROWS_AS(OverlapFamily::parse("general:5:3"), Error);
  CHECK_THROWS_AS(OverlapFamily::parse("onem:x"), Error);
  CHECK_THROWS_AS(OverlapFamily::parse("ring:5"), Error);
  for (const auto& id : all_classes()) {
    const auto f = family_for_class(id);
    if (!f) continue;
    const auto listed = class_patterns(id);
    CHECK_MESSAGE(std::find(listed.begin(), listed.end(), f->representative()) != listed.end(), id.str());
  }
  CHECK_FALSE(family_for_class(ClassId::parse("4.I")));
}
