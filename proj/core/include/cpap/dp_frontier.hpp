#pragma once

// State-level view of the avoider enumeration for a fixed final length n.
//
// After t values of a length-n permutation have been placed, only two things
// matter for its future: the relative order of the last L-1 placed values, and
// how many unused values sit in each of the L open intervals those values cut
// out of 1..n. A Frontier maps every such state to the number of prefixes that
// reach it.

#include "cpap/numeric.hpp"
#include "cpap/pattern.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace cpap::dp {

struct DPState {
  Pattern window;              // length L-1, in position order
  std::vector<unsigned> gaps;  // length L, lowest interval first

  /// Lehmer code of the window followed by 8-bit gap counts.
  [[nodiscard]] std::uint64_t key() const;
  [[nodiscard]] unsigned remaining() const;

  friend bool operator==(const DPState&, const DPState&) = default;
};

class Frontier {
 public:
  struct Entry {
    DPState state;
    Integer weight;
  };

  Frontier() = default;

  /// Adds weight to state (weight must be positive).
  void add(const DPState& state, const Integer& weight);

  [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
  [[nodiscard]] bool empty() const noexcept { return entries_.empty(); }
  [[nodiscard]] Integer total_weight() const;
  /// Weight of state, 0 if absent.
  [[nodiscard]] Integer weight(const DPState& state) const;

  [[nodiscard]] auto begin() const { return entries_.begin(); }
  [[nodiscard]] auto end() const { return entries_.end(); }

 private:
  std::unordered_map<std::uint64_t, Entry> entries_;
};

/// Every window order with every gap composition of n-(L-1), weight 1.
/// Requires n >= L-1 and n < 256.
Frontier seed_frontier(const Pattern& pat, unsigned n);

/// Places one more value: every unused value in every interval, rejecting the
/// placements that complete an occurrence of pat; successor weights merge by
/// addition.
Frontier expand(const Frontier& frontier, const Pattern& pat);

/// c_n(pat) by seeding and expanding to completion.
Integer count_by_frontier(const Pattern& pat, unsigned n);

}  // namespace cpap::dp
