#pragma once

// Shared series interchange format:
//   { "kind": "counts" | "rational-series", "provenance": "...", "order": N,
//     "values": ["1", "-3/4", ...] }
// Every number is a decimal string so no precision is lost.

#include "cpap/series.hpp"

#include <json.hpp>

#include <string>

namespace cpap {

nlohmann::json to_json(const CountSeries& series);
nlohmann::json to_json(const TruncatedSeries& series, const std::string& provenance);

/// Accepts either kind; a "counts" document must hold integers.
CountSeries count_series_from_json(const nlohmann::json& doc);
TruncatedSeries truncated_series_from_json(const nlohmann::json& doc);

/// Serialized form used for files: two-space indented, trailing newline.
std::string dump(const nlohmann::json& doc);

}  // namespace cpap
