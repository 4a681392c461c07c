#pragma once

// The seven length-4 and twenty-five length-5 c-Wilf classes, transcribed
// verbatim (including one pattern that is listed under two classes).

#include "cpap/pattern.hpp"

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cpap {

/// Identifies a class as "<length>.<roman numeral>", e.g. 4.V or 5.XXV.
class ClassId {
 public:
  ClassId(int length, int index);  // index is 1-based
  static ClassId parse(std::string_view label);

  [[nodiscard]] int length() const noexcept { return length_; }
  [[nodiscard]] int index() const noexcept { return index_; }
  [[nodiscard]] std::string roman() const;
  [[nodiscard]] std::string str() const;  // "4.V"

  friend bool operator==(const ClassId&, const ClassId&) = default;
  friend auto operator<=>(const ClassId&, const ClassId&) = default;

 private:
  int length_;
  int index_;
};

int class_count(int length);  // 7 or 25; invalid-class error otherwise

/// Patterns exactly as listed for the class.
std::vector<Pattern> class_patterns(const ClassId& id);

/// Lexicographically least listed pattern.
Pattern canonical_representative(const ClassId& id);

std::vector<ClassId> all_classes();
std::vector<ClassId> classes_of_length(int length);

/// Every class whose list contains pat (normally one; 45213 appears twice).
std::vector<ClassId> classes_containing(const Pattern& pat);

/// Patterns that appear in more than one class list.
struct DuplicateListing {
  Pattern pattern;
  std::vector<ClassId> classes;
};
std::vector<DuplicateListing> duplicate_listings();

std::string to_roman(int value);
std::optional<int> from_roman(std::string_view text);

}  // namespace cpap
