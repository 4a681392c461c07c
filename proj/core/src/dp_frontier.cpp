#include "cpap/dp_frontier.hpp"

#include "cpap/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace cpap::dp {

namespace {

std::uint64_t lehmer_rank(std::span<const int> perm) {
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    std::uint64_t smaller = 0;
    for (std::size_t j = i + 1; j < perm.size(); ++j) smaller += perm[j] < perm[i] ? 1 : 0;
    rank = rank * (perm.size() - i) + smaller;
  }
  return rank;
}

void for_each_composition(unsigned total, std::size_t parts, const std::function<void(const std::vector<unsigned>&)>& fn) {
  std::vector<unsigned> g(parts, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i + 1 == parts) {
      g[i] = left;
      fn(g);
      return;
    }
    for (unsigned v = 0; v <= left; ++v) {
      g[i] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, total);
}

}  // namespace

std::uint64_t DPState::key() const {
  std::uint64_t k = lehmer_rank(window.elems());
  for (unsigned g : gaps) k = (k << 8U) | g;
  return k;
}

unsigned DPState::remaining() const { return std::accumulate(gaps.begin(), gaps.end(), 0U); }

void Frontier::add(const DPState& state, const Integer& weight) {
  auto [it, inserted] = entries_.try_emplace(state.key(), Entry{state, weight});
  if (!inserted) it->second.weight += weight;
}

Integer Frontier::total_weight() const {
  Integer total = 0;
  for (const auto& [key, entry] : entries_) total += entry.weight;
  return total;
}

Integer Frontier::weight(const DPState& state) const {
  const auto it = entries_.find(state.key());
  return it == entries_.end() ? Integer(0) : it->second.weight;
}

Frontier seed_frontier(const Pattern& pat, unsigned n) {
  const std::size_t L = pat.size();
  if (L < 2) fail(ErrorKind::domain, "patterns must have length >= 2");
  if (n + 1 < L) fail(ErrorKind::domain, "seed needs n >= L-1");
  if (n >= 256 || L > 8) fail(ErrorKind::domain, "state key supports n < 256 and L <= 8");
  Frontier f;
  std::vector<int> window(L - 1);
  std::iota(window.begin(), window.end(), 1);
  do {
    const Pattern w(window);
    for_each_composition(n - static_cast<unsigned>(L - 1), L,
                         [&](const std::vector<unsigned>& g) { f.add(DPState{w, g}, Integer(1)); });
  } while (std::next_permutation(window.begin(), window.end()));
  return f;
}

Frontier expand(const Frontier& frontier, const Pattern& pat) {
  const std::size_t L = pat.size();
  Frontier next;
  std::vector<int> extended(L);
  for (const auto& [key, entry] : frontier) {
    const DPState& st = entry.state;
    for (std::size_t slot = 0; slot < L; ++slot) {
      if (st.gaps[slot] == 0) continue;
      // The new value lies above exactly `slot` window values.
      for (std::size_t j = 0; j + 1 < L; ++j) {
        extended[j] = st.window[j] <= static_cast<int>(slot) ? st.window[j] : st.window[j] + 1;
      }
      extended[L - 1] = static_cast<int>(slot) + 1;
      if (order_isomorphic(extended, pat)) continue;

      // Value rank (0-based) of the oldest element among the L extended values.
      const std::size_t dropped = static_cast<std::size_t>(extended[0]) - 1;
      std::vector<int> kept(extended.begin() + 1, extended.end());
      const Pattern next_window = standardize(std::span<const int>(kept));

      for (unsigned below = 0; below < st.gaps[slot]; ++below) {
        // Split interval `slot` around the new value, then merge the two
        // intervals adjacent to the dropped (used) value.
        std::vector<unsigned> split;
        split.reserve(L + 1);
        for (std::size_t j = 0; j < L; ++j) {
          if (j == slot) {
            split.push_back(below);
            split.push_back(st.gaps[j] - 1 - below);
          } else {
            split.push_back(st.gaps[j]);
          }
        }
        std::vector<unsigned> merged;
        merged.reserve(L);
        for (std::size_t j = 0; j <= L; ++j) {
          if (j == dropped) {
            merged.push_back(split[j] + split[j + 1]);
            ++j;
          } else {
            merged.push_back(split[j]);
          }
        }
        next.add(DPState{next_window, std::move(merged)}, entry.weight);
      }
    }
  }
  return next;
}

Integer count_by_frontier(const Pattern& pat, unsigned n) {
  const std::size_t L = pat.size();
  if (n + 1 < L) return factorial(n);
  Frontier f = seed_frontier(pat, n);
  for (unsigned t = static_cast<unsigned>(L - 1); t < n; ++t) f = expand(f, pat);
  return f.total_weight();
}

}  // namespace cpap::dp
