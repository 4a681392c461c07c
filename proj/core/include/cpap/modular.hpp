#pragma once

// Word-size modular arithmetic and Chinese remaindering.

#include "cpap/numeric.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace cpap::modular {

using u64 = std::uint64_t;

inline u64 add_mod(u64 a, u64 b, u64 p) noexcept {
  const u64 s = a + b;
  return s >= p ? s - p : s;
}

inline u64 sub_mod(u64 a, u64 b, u64 p) noexcept { return a >= b ? a - b : a + p - b; }

inline u64 mul_mod(u64 a, u64 b, u64 p) noexcept {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p);
}

u64 pow_mod(u64 base, u64 exponent, u64 p) noexcept;
u64 inv_mod(u64 a, u64 p);  // p prime, a != 0 mod p

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(u64 n) noexcept;

/// The `count` largest primes below 2^62, in decreasing order.
std::vector<u64> large_primes(std::size_t count);

/// Enough large primes that their product exceeds `bound`.
std::vector<u64> primes_exceeding(const Integer& bound);

u64 reduce(const Integer& value, u64 p);  // value mod p in [0, p)

/// Unique x in [0, prod p) with x = residues[i] mod primes[i].
Integer crt(std::span<const u64> residues, std::span<const u64> primes);

}  // namespace cpap::modular
