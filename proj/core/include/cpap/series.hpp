#pragma once

// Dense truncated power series over exact rationals.

#include "cpap/numeric.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace cpap {

/// Dense polynomial with rational coefficients, lowest degree first.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial monomial(const Rational& c, std::size_t degree);

  /// -1 for the zero polynomial.
  [[nodiscard]] long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
  [[nodiscard]] const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  [[nodiscard]] Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  [[nodiscard]] Rational operator()(const Rational& x) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Prefix a_0..a_N of a formal power series. Operands of different orders
/// combine at the smaller order.
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  explicit TruncatedSeries(std::size_t order);  // zero series
  TruncatedSeries(std::vector<Rational> coeffs, std::size_t order);  // pads or truncates to order

  static TruncatedSeries one(std::size_t order);
  static TruncatedSeries x(std::size_t order);
  static TruncatedSeries from_polynomial(const Polynomial& p, std::size_t order);
  static TruncatedSeries from_integers(const std::vector<Integer>& values);  // order = size-1

  [[nodiscard]] std::size_t order() const noexcept { return coeffs_.size() - 1; }
  [[nodiscard]] const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  [[nodiscard]] const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  Rational& operator[](std::size_t i) { return coeffs_[i]; }

  /// Index of the first nonzero coefficient; order()+1 for the zero prefix.
  [[nodiscard]] std::size_t valuation() const noexcept;
  [[nodiscard]] bool is_zero() const noexcept { return valuation() > order(); }

  [[nodiscard]] TruncatedSeries truncated(std::size_t order) const;

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  TruncatedSeries& operator*=(const Rational& scalar);

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<Rational> coeffs_{Rational(0)};
};

TruncatedSeries ps_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries ps_sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries ps_mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries ps_scale(const TruncatedSeries& a, const Rational& c);
TruncatedSeries ps_pow(const TruncatedSeries& a, unsigned exponent);

/// r with a*r = 1 + O(x^{N+1}); non-unit error when a_0 = 0.
TruncatedSeries ps_reciprocal(const TruncatedSeries& a);

/// outer(inner(x)) by Horner evaluation; inner must have zero constant term.
TruncatedSeries ps_compose(const TruncatedSeries& outer, const TruncatedSeries& inner);

/// Formal derivative; the result has order N-1 (order 0 stays 0).
TruncatedSeries ps_derivative(const TruncatedSeries& a);

/// Multiplication by x^k, keeping the order.
TruncatedSeries ps_shift(const TruncatedSeries& a, std::size_t k);

/// Taylor prefix of num/den; pole-at-origin error when den(0) = 0.
TruncatedSeries rational_to_series(const Polynomial& num, const Polynomial& den, std::size_t order);

/// Exact integer sequence c_0..c_N of avoider counts, tagged with its source.
struct CountSeries {
  std::vector<Integer> counts;
  std::string provenance;

  [[nodiscard]] std::size_t order() const noexcept { return counts.empty() ? 0 : counts.size() - 1; }
  /// b_n = c_n / n!, the coefficients of the exponential generating function.
  [[nodiscard]] TruncatedSeries egf() const;
  [[nodiscard]] CountSeries truncated(std::size_t order) const;
  /// Checks c_0 = 1, c_1 = 1 and 0 <= c_n <= n!; verification error otherwise.
  void validate() const;

  friend bool operator==(const CountSeries& a, const CountSeries& b) { return a.counts == b.counts; }
};

/// n! * a_n for each coefficient; invalid-input error if any is not an integer.
CountSeries counts_from_egf(const TruncatedSeries& egf, std::string provenance);

}  // namespace cpap
