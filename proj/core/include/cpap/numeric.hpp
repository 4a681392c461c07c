#pragma once

// Exact and high-precision scalar types shared by every module.

#include <gmpxx.h>

#include <boost/multiprecision/mpfr.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace cpap {

using Integer = mpz_class;
using Rational = mpq_class;
using BigFloat = boost::multiprecision::mpfr_float;

/// Parses "123", "-7" or "p/q" into a canonical rational.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

/// Decimal "p" or "p/q" form; the inverse of parse_rational.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

Integer factorial(unsigned n);
Integer binomial(long n, long k);  // 0 outside 0 <= k <= n

BigFloat to_bigfloat(const Rational& value);
BigFloat to_bigfloat(const Integer& value);

/// Sets the default MPFR working precision (decimal digits) for its lifetime.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

/// Pascal-row cache of exact binomial coefficients C(n, k), 0 <= n <= max_n.
class BinomialTable {
 public:
  explicit BinomialTable(unsigned max_n = 0);
  /// Grows the table on demand.
  const Integer& operator()(long n, long k);
  void reserve(unsigned max_n);

 private:
  std::vector<std::vector<Integer>> rows_;
  Integer zero_{0};
};

}  // namespace cpap
