#pragma once

// The eleven end-to-end acceptance checks, shared by `cpap verify-all` and the
// acceptance test binary.

#include <json.hpp>

#include <filesystem>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

namespace cpap::acceptance {

enum class Profile { full, quick };

struct Settings {
  Profile profile = Profile::full;
  std::filesystem::path cache_dir;  // empty: no cache
  std::set<int> only;               // empty: all criteria
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  double seconds = 0;
  std::vector<std::string> details;
};

inline constexpr int kCriterionCount = 11;

/// Runs the selected criteria in order, printing one PASS/FAIL line per
/// criterion to `out` (details follow failed lines, or every line when verbose).
std::vector<CriterionResult> run(const Settings& settings, std::ostream& out, bool verbose = false);

nlohmann::json report(const std::vector<CriterionResult>& results, const Settings& settings);

}  // namespace cpap::acceptance
