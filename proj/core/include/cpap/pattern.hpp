#pragma once

// Permutations, consecutive patterns and occurrence scanning.

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cpap {

namespace detail {

/// A bijection on {1..n} stored in one-line notation.
class Bijection {
 public:
  [[nodiscard]] std::size_t size() const noexcept { return elems_.size(); }
  [[nodiscard]] int operator[](std::size_t i) const { return elems_[i]; }
  [[nodiscard]] std::span<const int> elems() const noexcept { return elems_; }

  /// "1423" when every entry is a single digit, otherwise "1,4,2,3".
  [[nodiscard]] std::string str() const;

  friend bool operator==(const Bijection&, const Bijection&) = default;
  friend auto operator<=>(const Bijection&, const Bijection&) = default;

 protected:
  Bijection() = default;
  explicit Bijection(std::vector<int> elems);  // validates
  static std::vector<int> parse_elems(std::string_view text);

  std::vector<int> elems_;
};

}  // namespace detail

class Permutation : public detail::Bijection {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> elems) : Bijection(std::move(elems)) {}
  static Permutation parse(std::string_view text) { return Permutation(parse_elems(text)); }
};

/// A permutation of 1..m used as a forbidden consecutive pattern.
class Pattern : public detail::Bijection {
 public:
  Pattern() = default;
  explicit Pattern(std::vector<int> elems);
  static Pattern parse(std::string_view text) { return Pattern(parse_elems(text)); }

  [[nodiscard]] std::size_t length() const noexcept { return size(); }
};

/// Largest pattern length accepted by the brute-force oracles.
inline constexpr std::size_t kMaxOraclePatternLength = 8;

/// Rank sequence of distinct values; duplicates are an invalid-input error.
Pattern standardize(std::span<const long> word);
Pattern standardize(std::span<const int> word);

/// True when word (distinct values) is order-isomorphic to pat.
bool order_isomorphic(std::span<const int> word, const Pattern& pat);

enum class OccurrenceMode { classical, consecutive };

struct Occurrences {
  std::size_t count = 0;
  /// 0-based host positions of each occurrence, ordered lexicographically.
  std::vector<std::vector<std::size_t>> index_sets;
};

Occurrences occurrences(const Permutation& host, const Pattern& pat, OccurrenceMode mode);

/// 0-based start positions of consecutive occurrences of pat in word.
std::vector<std::size_t> consecutive_starts(std::span<const int> word, const Pattern& pat);

enum class Symmetry { reverse, complement };

Pattern apply(const Pattern& pat, Symmetry which);
inline Pattern reverse(const Pattern& pat) { return apply(pat, Symmetry::reverse); }
inline Pattern complement(const Pattern& pat) { return apply(pat, Symmetry::complement); }

}  // namespace cpap
