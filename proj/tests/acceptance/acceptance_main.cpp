// Acceptance suite driver for ctest. Criteria listed with --known-red are still
// run and still print FAIL; they just do not turn the exit status red.

#include "acceptance/acceptance.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"acceptance suite"};
  bool quick = false, verbose = false;
  std::string cache_dir, report_path;
  std::vector<int> only, known_red;
  app.add_flag("--quick", quick);
  app.add_flag("-v,--verbose", verbose);
  app.add_option("--cache-dir", cache_dir);
  app.add_option("--report", report_path);
  app.add_option("--only", only);
  app.add_option("--known-red", known_red, "Criteria whose failure is documented and tolerated");
  CLI11_PARSE(app, argc, argv);

  cpap::acceptance::Settings settings;
  settings.profile = quick ? cpap::acceptance::Profile::quick : cpap::acceptance::Profile::full;
  settings.cache_dir = cache_dir;
  settings.only.insert(only.begin(), only.end());
  const auto results = cpap::acceptance::run(settings, std::cout, verbose);

  const std::set<int> tolerated(known_red.begin(), known_red.end());
  int unexpected = 0;
  for (const auto& r : results) {
    if (r.passed) continue;
    if (tolerated.count(r.id))
      std::cout << "known red: criterion " << r.id << '\n';
    else
      ++unexpected;
  }
  if (!report_path.empty()) {
    std::ofstream f(report_path);
    f << cpap::acceptance::report(results, settings).dump(2) << '\n';
  }
  std::cout << (unexpected ? "acceptance: FAILED" : "acceptance: ok") << " (" << unexpected
            << " unexpected failures)\n";
  return unexpected ? 1 : 0;
}
