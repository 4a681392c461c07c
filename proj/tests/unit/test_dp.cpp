#include "cpap/brute.hpp"
#include "cpap/class_registry.hpp"
#include "cpap/dp_enumerator.hpp"
#include "cpap/dp_frontier.hpp"

#include "doctest.h"

using namespace cpap;
using namespace cpap::dp;

TEST_CASE("small prefixes") {
  CHECK(count_series(Pattern::parse("1423"), 3).counts == std::vector<Integer>{1, 1, 2, 6});
  CHECK(count_series(Pattern::parse("1234"), 4).counts.back() == 23);
  CHECK(count_series(Pattern::parse("12"), 6).counts == std::vector<Integer>{1, 1, 1, 1, 1, 1, 1});
  CHECK(count_series(Pattern::parse("132"), 6).counts.back() == brute_count(Pattern::parse("132"), 6));
}

TEST_CASE("frontier engine") {
  const auto pat = Pattern::parse("1423");
  CHECK(count_by_frontier(pat, 5) == 110);
  // Conservation: outgoing weight equals the sum of gap counts minus rejections.
  const Frontier seed = seed_frontier(pat, 4);
  const Frontier next = expand(seed, pat);
  CHECK(seed.total_weight() == 6 * 4);
  CHECK(next.total_weight() == 23);
  // Window 142 with one value left above 4: placing it in the top slot would
  // complete 1423 only when it lands between 2 and 4.
  Integer rejected = 0;
  for (const auto& [key, e] : seed) {
    unsigned slots = 0;
    for (unsigned g : e.state.gaps) slots += g;
    Frontier single;
    single.add(e.state, e.weight);
    rejected += slots - expand(single, pat).total_weight();
  }
  CHECK(rejected == 1);
}

TEST_CASE("dp matches brute force through n = 9") {
  for (const auto& id : all_classes()) {
    const Pattern pat = canonical_representative(id);
    const auto series = count_series(pat, 9);
    for (unsigned n = 0; n <= 9; ++n) CHECK_MESSAGE(series.counts[n] == brute_count(pat, n), pat.str(), " n=", n);
  }
}

TEST_CASE("fast and reference engines agree") {
  for (const char* text : {"1423", "2413", "15243", "1342"}) {
    const auto pat = Pattern::parse(text);
    CHECK(count_series(pat, 12) == count_series_reference(pat, 12));
  }
}

TEST_CASE("b_n is non-increasing and symmetric") {
  const auto pat = Pattern::parse("1324");
  const auto s = count_series(pat, 40);
  for (unsigned n = 0; n < 40; ++n) CHECK(s.counts[n + 1] <= (n + 1) * s.counts[n]);
  CHECK(count_series(reverse(pat), 40) == s);
  CHECK(count_series(complement(pat), 40) == s);
}

TEST_CASE("threads do not change results") {
  const auto pat = Pattern::parse("13425");
  DpOptions opt;
  opt.threads = 3;
  CHECK(count_series(pat, 25, opt) == count_series(pat, 25));
}

TEST_CASE("budget yields a partial prefix") {
  DpOptions opt;
  opt.memory_budget = 200'000;
  const auto pat = Pattern::parse("1423");
  try {
    (void)count_series(pat, 80, opt);
    FAIL("expected budget error");
  } catch (const BudgetExceeded& e) {
    const auto& part = e.partial();
    CHECK(part.order() < 80);
    CHECK(part.order() >= 10);
    CHECK(part == count_series(pat, static_cast<unsigned>(part.order())));
  }
}

TEST_CASE("state count") { CHECK(state_count(4, 10) == 6 * 120); }

#include "cpap/dp_cache.hpp"

#include <filesystem>
#include <fstream>

TEST_CASE("series cache round trip and corruption") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "cpap-cache-test";
  fs::remove_all(dir);
  std::vector<std::string> warnings;
  const SeriesCache cache(dir, [&](const std::string& w) { warnings.push_back(w); });
  const auto pat = Pattern::parse("2413");
  CHECK_FALSE(cache.load(pat, 10).has_value());
  const auto s = cached_count_series(pat, 20, &cache);
  REQUIRE(fs::exists(cache.file_for(pat)));
  CHECK(cache.load(pat, 20) == s);
  CHECK(cache.load(pat, 12) == s.truncated(12));
  CHECK_FALSE(cache.load(pat, 21).has_value());

  {
    std::fstream f(cache.file_for(pat), std::ios::in | std::ios::out | std::ios::binary);
    f.seekp(30);
    f.put('\x7f');
  }
  CHECK_FALSE(cache.load(pat, 20).has_value());
  CHECK(warnings.size() == 1);
  CHECK(cached_count_series(pat, 20, &cache) == s);
  CHECK(cache.load(pat, 20) == s);
  fs::remove_all(dir);
}
