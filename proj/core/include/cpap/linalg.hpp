#pragma once

// Exact integer linear algebra for the D-finite fitter.

#include "cpap/numeric.hpp"

#include <cstdint>
#include <vector>

namespace cpap {

/// Row-major; every row has the same length.
using IntMatrix = std::vector<std::vector<Integer>>;

/// Rank of the matrix reduced modulo the prime p. Never exceeds the rank
/// over Q, so full rank mod p proves a trivial nullspace.
std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t p);

/// Basis of the rational right nullspace, one primitive integer vector per
/// free column (ascending), found by fraction-free Bareiss elimination.
/// The first nonzero entry of each vector is positive.
std::vector<std::vector<Integer>> nullspace(IntMatrix m, std::size_t cols);

/// Scales a rational row to integers (least common denominator).
std::vector<Integer> clear_denominators(const std::vector<Rational>& row);

}  // namespace cpap
