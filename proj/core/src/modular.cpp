#include "cpap/modular.hpp"

#include "cpap/errors.hpp"

#include <array>
#include <mutex>

namespace cpap::modular {

u64 pow_mod(u64 base, u64 exponent, u64 p) noexcept {
  u64 result = 1 % p;
  base %= p;
  while (exponent > 0) {
    if (exponent & 1U) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exponent >>= 1U;
  }
  return result;
}

u64 inv_mod(u64 a, u64 p) {
  if (a % p == 0) fail(ErrorKind::domain, "inverse of zero modulo a prime");
  return pow_mod(a, p - 2, p);
}

bool is_prime(u64 n) noexcept {
  if (n < 2) return false;
  static constexpr std::array<u64, 12> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 b : kBases) {
    if (n % b == 0) return n == b;
  }
  u64 d = n - 1;
  unsigned r = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++r;
  }
  for (u64 a : kBases) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < r; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<u64> large_primes(std::size_t count) {
  static std::mutex mutex;
  static std::vector<u64> cache;
  std::lock_guard lock(mutex);
  u64 candidate = cache.empty() ? (u64{1} << 62) - 1 : cache.back() - 2;
  while (cache.size() < count) {
    if (is_prime(candidate)) cache.push_back(candidate);
    candidate -= 2;
  }
  return {cache.begin(), cache.begin() + static_cast<long>(count)};
}

std::vector<u64> primes_exceeding(const Integer& bound) {
  // Each prime exceeds 2^61, so bits/61 + 1 of them suffice.
  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  return large_primes(bits / 61 + 1);
}

u64 reduce(const Integer& value, u64 p) {
  Integer r;
  Integer modulus;
  mpz_import(modulus.get_mpz_t(), 1, 1, sizeof(u64), 0, 0, &p);
  mpz_fdiv_r(r.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
  u64 out = 0;
  mpz_export(&out, nullptr, 1, sizeof(u64), 0, 0, r.get_mpz_t());
  return out;
}

namespace {

Integer to_integer(u64 v) {
  Integer z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(u64), 0, 0, &v);
  return z;
}

}  // namespace

Integer crt(std::span<const u64> residues, std::span<const u64> primes) {
  if (residues.size() != primes.size() || primes.empty()) fail(ErrorKind::invalid_input, "crt: size mismatch");
  // Garner's mixed-radix reconstruction.
  Integer result = to_integer(residues[0]);
  Integer modulus = to_integer(primes[0]);
  for (std::size_t i = 1; i < primes.size(); ++i) {
    const u64 p = primes[i];
    const u64 cur = reduce(result, p);
    const u64 m_inv = inv_mod(reduce(modulus, p), p);
    const u64 t = mul_mod(sub_mod(residues[i] % p, cur, p), m_inv, p);
    result += modulus * to_integer(t);
    modulus *= to_integer(p);
  }
  return result;
}

}  // namespace cpap::modular
