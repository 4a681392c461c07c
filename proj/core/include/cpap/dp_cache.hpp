#pragma once

// On-disk cache of DP count series, one binary file per pattern.
//
// A file stores the longest prefix computed so far; requests for shorter
// prefixes are served by truncation. Files are written to a temporary name and
// renamed into place. A file that fails its checksum is reported through the
// warning hook and recomputed.

#include "cpap/dp_enumerator.hpp"

#include <filesystem>
#include <functional>
#include <optional>
#include <string>

namespace cpap::dp {

inline constexpr std::uint32_t kCacheFormatVersion = 1;

class SeriesCache {
 public:
  using WarningSink = std::function<void(const std::string&)>;

  explicit SeriesCache(std::filesystem::path dir, WarningSink warn = {});

  [[nodiscard]] const std::filesystem::path& dir() const noexcept { return dir_; }
  [[nodiscard]] std::filesystem::path file_for(const Pattern& pat) const;

  /// c_0..c_N when a valid file holds at least that many terms.
  std::optional<CountSeries> load(const Pattern& pat, unsigned N) const;
  /// Keeps the existing file if it is already longer.
  void store(const Pattern& pat, const CountSeries& series) const;

 private:
  void warn(const std::string& message) const;

  std::filesystem::path dir_;
  WarningSink warn_;
};

/// count_series through the cache (nullptr means no cache).
CountSeries cached_count_series(const Pattern& pat, unsigned N, const SeriesCache* cache,
                                const DpOptions& options = {});

}  // namespace cpap::dp
