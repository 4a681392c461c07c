#include "cpap/brute.hpp"

#include "cpap/errors.hpp"

#include <algorithm>

namespace cpap {

namespace {

void check_cap(const Pattern& pat, unsigned n, unsigned cap) {
  if (n > cap) {
    fail(ErrorKind::cap_exceeded,
         "brute force limited to n <= " + std::to_string(cap) + " (requested " + std::to_string(n) + ")");
  }
  if (pat.size() > kMaxOraclePatternLength) {
    fail(ErrorKind::domain, "oracle patterns are limited to length " + std::to_string(kMaxOraclePatternLength));
  }
}

/// Depth-first walk over all permutations of 1..n placing one value per position.
/// The visitor sees each completed prefix and may prune it by returning false.
class PermutationWalk {
 public:
  explicit PermutationWalk(unsigned n) : n_(n), used_(n + 1, false) { prefix_.reserve(n); }

  template <typename OnPrefix, typename OnLeaf>
  void run(OnPrefix&& on_prefix, OnLeaf&& on_leaf) {
    descend(on_prefix, on_leaf);
  }

 private:
  template <typename OnPrefix, typename OnLeaf>
  void descend(OnPrefix& on_prefix, OnLeaf& on_leaf) {
    if (prefix_.size() == n_) {
      on_leaf(std::span<const int>(prefix_));
      return;
    }
    for (unsigned v = 1; v <= n_; ++v) {
      if (used_[v]) continue;
      used_[v] = true;
      prefix_.push_back(static_cast<int>(v));
      if (on_prefix(std::span<const int>(prefix_))) descend(on_prefix, on_leaf);
      prefix_.pop_back();
      used_[v] = false;
    }
  }

  unsigned n_;
  std::vector<bool> used_;
  std::vector<int> prefix_;
};

bool ends_with_occurrence(std::span<const int> prefix, const Pattern& pat) {
  const std::size_t m = pat.size();
  return prefix.size() >= m && order_isomorphic(prefix.subspan(prefix.size() - m), pat);
}

/// Necessary condition for a prefix to extend to a cluster: the window at 0 is
/// an occurrence, and every position whose covering windows are all known is
/// reachable by a chain of overlapping occurrences.
bool cluster_prefix_viable(std::span<const int> prefix, const Pattern& pat) {
  const std::size_t m = pat.size();
  const std::size_t j = prefix.size();
  if (j < m) return true;
  if (!order_isomorphic(prefix.subspan(0, m), pat)) return false;
  std::size_t reach = 0;  // largest chain-reachable occurrence start
  for (std::size_t s = 1; s + m <= j; ++s) {
    if (s > reach + m - 1) return false;
    if (order_isomorphic(prefix.subspan(s, m), pat)) reach = s;
  }
  // Windows starting in (reach, reach+m-1] that are already complete.
  const std::size_t known_last = j - m;
  return !(reach + m - 1 <= known_last);
}

}  // namespace

bool is_marked_cluster(std::span<const int> pi, const Pattern& pat, std::span<const std::size_t> marked) {
  const std::size_t m = pat.size();
  const std::size_t n = pi.size();
  if (marked.empty() || n < m) return false;
  std::vector<bool> covered(n, false);
  std::size_t prev = 0;
  for (std::size_t i = 0; i < marked.size(); ++i) {
    const std::size_t s = marked[i];
    if (s + m > n || !order_isomorphic(pi.subspan(s, m), pat)) return false;
    if (i > 0 && (s <= prev || s > prev + m - 1)) return false;
    for (std::size_t p = s; p < s + m; ++p) covered[p] = true;
    prev = s;
  }
  return std::all_of(covered.begin(), covered.end(), [](bool c) { return c; });
}

Integer brute_count(const Pattern& pat, unsigned n, unsigned cap) {
  check_cap(pat, n, cap);
  if (n == 0) return 1;
  Integer total = 0;
  unsigned long leaves = 0;
  PermutationWalk walk(n);
  walk.run([&](std::span<const int> prefix) { return !ends_with_occurrence(prefix, pat); },
           [&](std::span<const int>) { ++leaves; });
  total = leaves;
  return total;
}

std::vector<Integer> brute_cluster_row(const Pattern& pat, unsigned n, unsigned cap) {
  check_cap(pat, n, cap);
  const std::size_t m = pat.size();
  std::vector<Integer> row(n + 1, 0);
  if (n == 1) {
    row[0] = 1;  // s(1,0) convention
    return row;
  }
  if (n < m) return row;

  PermutationWalk walk(n);
  walk.run([&](std::span<const int> prefix) { return cluster_prefix_viable(prefix, pat); },
           [&](std::span<const int> pi) {
             const auto starts = consecutive_starts(pi, pat);
             if (starts.empty() || starts.front() != 0 || starts.back() != n - m) return;
             // ways[i][k]: marked chains from starts[0] ending at starts[i] using k marks.
             const std::size_t q = starts.size();
             std::vector<std::vector<unsigned long>> ways(q, std::vector<unsigned long>(q + 1, 0));
             ways[0][1] = 1;
             for (std::size_t i = 1; i < q; ++i) {
               for (std::size_t h = 0; h < i; ++h) {
                 if (starts[i] > starts[h] + m - 1) continue;
                 for (std::size_t k = 1; k < q; ++k) ways[i][k + 1] += ways[h][k];
               }
             }
             for (std::size_t k = 1; k <= q && k <= n; ++k) row[k] += ways[q - 1][k];
           });
  return row;
}

Integer brute_clusters(const Pattern& pat, unsigned n, unsigned k, unsigned cap) {
  const auto row = brute_cluster_row(pat, n, cap);
  return k < row.size() ? row[k] : Integer(0);
}

std::vector<Integer> brute_covered_permutation_row(const Pattern& pat, unsigned n, unsigned cap) {
  check_cap(pat, n, cap);
  const std::size_t m = pat.size();
  std::vector<Integer> row(n + 1, 0);
  if (n == 1) {
    row[0] = 1;
    return row;
  }
  if (n < m) return row;
  PermutationWalk walk(n);
  walk.run([&](std::span<const int> prefix) { return cluster_prefix_viable(prefix, pat); },
           [&](std::span<const int> pi) {
             const auto starts = consecutive_starts(pi, pat);
             if (is_marked_cluster(pi, pat, starts)) row[starts.size()] += 1;
           });
  return row;
}

}  // namespace cpap
