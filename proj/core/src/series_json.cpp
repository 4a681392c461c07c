#include "cpap/series_json.hpp"

#include "cpap/errors.hpp"

namespace cpap {

nlohmann::json to_json(const CountSeries& series) {
  nlohmann::json values = nlohmann::json::array();
  for (const auto& c : series.counts) values.push_back(to_string(c));
  return {{"kind", "counts"}, {"provenance", series.provenance}, {"order", series.order()}, {"values", values}};
}

nlohmann::json to_json(const TruncatedSeries& series, const std::string& provenance) {
  nlohmann::json values = nlohmann::json::array();
  for (const auto& c : series.coeffs()) values.push_back(to_string(c));
  return {{"kind", "rational-series"}, {"provenance", provenance}, {"order", series.order()}, {"values", values}};
}

namespace {

void check_shape(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("kind") || !doc.contains("order") || !doc.contains("values") ||
      !doc["values"].is_array() || !doc["order"].is_number_unsigned()) {
    fail(ErrorKind::invalid_input, "not a series document");
  }
  const auto kind = doc["kind"].get<std::string>();
  if (kind != "counts" && kind != "rational-series") fail(ErrorKind::invalid_input, "unknown series kind '" + kind + "'");
  if (doc["values"].size() != doc["order"].get<std::size_t>() + 1) {
    fail(ErrorKind::invalid_input, "series 'values' length does not match 'order'");
  }
}

}  // namespace

TruncatedSeries truncated_series_from_json(const nlohmann::json& doc) {
  check_shape(doc);
  std::vector<Rational> c;
  for (const auto& v : doc["values"]) c.push_back(parse_rational(v.get<std::string>()));
  const auto order = doc["order"].get<std::size_t>();
  return TruncatedSeries(std::move(c), order);
}

CountSeries count_series_from_json(const nlohmann::json& doc) {
  check_shape(doc);
  CountSeries out;
  out.provenance = doc.value("provenance", "");
  for (const auto& v : doc["values"]) out.counts.push_back(parse_integer(v.get<std::string>()));
  return out;
}

std::string dump(const nlohmann::json& doc) { return doc.dump(2) + "\n"; }

}  // namespace cpap
