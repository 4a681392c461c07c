#include "cpap/class_registry.hpp"

#include "cpap/errors.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace cpap {

namespace {

const std::array<std::vector<std::string_view>, 7> kLength4 = {{
    {"1234", "4321"},
    {"2413", "3142"},
    {"2143", "3412"},
    {"1324", "4231"},
    {"1423", "3241", "4132", "2314"},
    {"1342", "4213", "4123", "2431", "3124", "1432", "2341", "3214"},
    {"1243", "3421", "4312", "2134"},
}};

const std::array<std::vector<std::string_view>, 25> kLength5 = {{
    {"12354", "21345", "45321", "54312"},
    {"12453", "12543", "31245", "32145", "34521", "35421", "54123", "54213"},
    {"21534", "23154", "43512", "45132"},
    {"24153", "25143", "31524", "32514", "34152", "35142", "41523", "45213"},
    {"13452", "13542", "14352", "14532", "15342", "15432", "23451", "23541",
     "24351", "24531", "25341", "25431", "41235", "41325", "42135", "42315",
     "43125", "43215", "51234", "51324", "52134", "52314", "53124", "53214"},
    {"12435", "13245", "53421", "54231"},
    {"15234", "23415", "43251", "51432"},
    {"15423", "32451", "34215", "51243"},
    {"21354", "45312"},
    {"21453", "31254", "35412", "45213"},
    {"13425", "14235", "52431", "53241"},
    {"14523", "32541", "34125", "52143"},
    {"23514", "25134", "41532", "43152"},
    {"25413", "31452", "35214", "41253"},
    {"15324", "24315", "42351", "51342"},
    {"12534", "23145", "43521", "54132"},
    {"21543", "32154", "34512", "45123"},
    {"14325", "52341"},
    {"13524", "24135", "42531", "53142"},
    {"25314", "41352"},
    {"24513", "31542", "35124", "42153"},
    {"13254", "21435", "45231", "53412"},
    {"15243", "32415", "34251", "51423"},
    {"14253", "31425", "35241", "52413"},
    {"12345", "54321"},
}};

const std::vector<std::string_view>& raw_list(const ClassId& id) {
  if (id.length() == 4) return kLength4[static_cast<std::size_t>(id.index() - 1)];
  return kLength5[static_cast<std::size_t>(id.index() - 1)];
}

}  // namespace

std::string to_roman(int value) {
  static constexpr std::array<std::pair<int, std::string_view>, 13> kTable = {{
      {1000, "M"}, {900, "CM"}, {500, "D"}, {400, "CD"}, {100, "C"}, {90, "XC"}, {50, "L"},
      {40, "XL"}, {10, "X"}, {9, "IX"}, {5, "V"}, {4, "IV"}, {1, "I"},
  }};
  std::string out;
  for (const auto& [v, s] : kTable) {
    while (value >= v) {
      out += s;
      value -= v;
    }
  }
  return out;
}

std::optional<int> from_roman(std::string_view text) {
  for (int v = 1; v <= 100; ++v) {
    if (to_roman(v) == text) return v;
  }
  return std::nullopt;
}

int class_count(int length) {
  if (length == 4) return 7;
  if (length == 5) return 25;
  fail(ErrorKind::invalid_class, "no classes registered for length " + std::to_string(length));
}

ClassId::ClassId(int length, int index) : length_(length), index_(index) {
  if (index < 1 || index > class_count(length)) {
    fail(ErrorKind::invalid_class,
         "class " + std::to_string(length) + "." + to_roman(std::max(index, 1)) + " does not exist");
  }
}

ClassId ClassId::parse(std::string_view label) {
  const auto dot = label.find('.');
  if (dot == std::string_view::npos || dot == 0) {
    fail(ErrorKind::invalid_class, "class labels look like 4.V, got '" + std::string(label) + "'");
  }
  const std::string_view len_text = label.substr(0, dot);
  if (len_text != "4" && len_text != "5") {
    fail(ErrorKind::invalid_class, "unknown class length in '" + std::string(label) + "'");
  }
  const auto index = from_roman(label.substr(dot + 1));
  if (!index) fail(ErrorKind::invalid_class, "bad roman numeral in '" + std::string(label) + "'");
  return ClassId(len_text[0] - '0', *index);
}

std::string ClassId::roman() const { return to_roman(index_); }
std::string ClassId::str() const { return std::to_string(length_) + "." + roman(); }

std::vector<Pattern> class_patterns(const ClassId& id) {
  std::vector<Pattern> out;
  for (std::string_view s : raw_list(id)) out.push_back(Pattern::parse(s));
  return out;
}

Pattern canonical_representative(const ClassId& id) {
  auto pats = class_patterns(id);
  return *std::min_element(pats.begin(), pats.end());
}

std::vector<ClassId> classes_of_length(int length) {
  std::vector<ClassId> out;
  for (int i = 1; i <= class_count(length); ++i) out.emplace_back(length, i);
  return out;
}

std::vector<ClassId> all_classes() {
  auto out = classes_of_length(4);
  auto five = classes_of_length(5);
  out.insert(out.end(), five.begin(), five.end());
  return out;
}

std::vector<ClassId> classes_containing(const Pattern& pat) {
  std::vector<ClassId> out;
  if (pat.size() != 4 && pat.size() != 5) return out;
  for (const ClassId& id : classes_of_length(static_cast<int>(pat.size()))) {
    const auto& list = raw_list(id);
    if (std::find(list.begin(), list.end(), pat.str()) != list.end()) out.push_back(id);
  }
  return out;
}

std::vector<DuplicateListing> duplicate_listings() {
  std::map<std::string_view, std::vector<ClassId>> seen;
  for (const ClassId& id : all_classes()) {
    for (std::string_view s : raw_list(id)) seen[s].push_back(id);
  }
  std::vector<DuplicateListing> out;
  for (const auto& [s, ids] : seen) {
    if (ids.size() > 1) out.push_back({Pattern::parse(s), ids});
  }
  return out;
}

}  // namespace cpap
