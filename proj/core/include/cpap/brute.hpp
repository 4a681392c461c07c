#pragma once

// Exhaustive reference oracles. Independent of every recurrence and of the
// dynamic-programming enumerator; intended only for small n.

#include "cpap/numeric.hpp"
#include "cpap/pattern.hpp"

#include <cstddef>
#include <vector>

namespace cpap {

inline constexpr unsigned kDefaultBruteCap = 12;

/// Number of length-n permutations with no consecutive occurrence of pat.
Integer brute_count(const Pattern& pat, unsigned n, unsigned cap = kDefaultBruteCap);

/// Goulden-Jackson k-clusters of length n: pairs (pi, M) where M is a set of k
/// marked consecutive occurrences of pat in pi, every position of pi lies in a
/// marked occurrence and successive marked occurrences share >= 1 position.
/// s(1,0) = 1 by convention.
Integer brute_clusters(const Pattern& pat, unsigned n, unsigned k, unsigned cap = kDefaultBruteCap);

/// Row n of the marked-cluster table: entry k is brute_clusters(pat, n, k).
std::vector<Integer> brute_cluster_row(const Pattern& pat, unsigned n, unsigned cap = kDefaultBruteCap);

/// Permutations with exactly k occurrences, all positions covered and every
/// two successive occurrences overlapping. Coincides with brute_cluster_row
/// unless a non-successive pair of occurrences can also overlap (e.g. 15243).
std::vector<Integer> brute_covered_permutation_row(const Pattern& pat, unsigned n,
                                                   unsigned cap = kDefaultBruteCap);

/// True when the marked occurrence starts form a cluster of pi.
bool is_marked_cluster(std::span<const int> pi, const Pattern& pat, std::span<const std::size_t> marked);

}  // namespace cpap
