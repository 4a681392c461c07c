#include "cpap/series.hpp"

#include "cpap/errors.hpp"

#include <algorithm>

namespace cpap {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> coeffs(degree + 1, Rational(0));
  coeffs[degree] = c;
  return Polynomial(std::move(coeffs));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(c));
}

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1, Rational(0)) {}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs, std::size_t order) : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1, Rational(0));
}

TruncatedSeries TruncatedSeries::one(std::size_t order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::x(std::size_t order) {
  TruncatedSeries s(order);
  if (order >= 1) s.coeffs_[1] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::from_polynomial(const Polynomial& p, std::size_t order) {
  TruncatedSeries s(order);
  for (std::size_t i = 0; i < p.coeffs().size() && i <= order; ++i) s.coeffs_[i] = p.coeffs()[i];
  return s;
}

TruncatedSeries TruncatedSeries::from_integers(const std::vector<Integer>& values) {
  if (values.empty()) fail(ErrorKind::invalid_input, "empty coefficient list");
  std::vector<Rational> c;
  c.reserve(values.size());
  for (const auto& v : values) c.emplace_back(v);
  return TruncatedSeries(std::move(c), values.size() - 1);
}

std::size_t TruncatedSeries::valuation() const noexcept {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return i;
  }
  return coeffs_.size();
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  return TruncatedSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(std::min(order + 1, coeffs_.size()))),
                         order);
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

TruncatedSeries ps_add(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r = a;
  r += b;
  return r;
}

TruncatedSeries ps_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r = a;
  r -= b;
  return r;
}

TruncatedSeries ps_scale(const TruncatedSeries& a, const Rational& c) {
  TruncatedSeries r = a;
  r *= c;
  return r;
}

TruncatedSeries ps_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  const std::size_t va = a.valuation();
  const std::size_t vb = b.valuation();
  TruncatedSeries r(n);
  Rational term;
  for (std::size_t i = va; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = vb; i + j <= n; ++j) {
      if (b[j] == 0) continue;
      mpq_mul(term.get_mpq_t(), a[i].get_mpq_t(), b[j].get_mpq_t());
      r[i + j] += term;
    }
  }
  return r;
}

TruncatedSeries ps_pow(const TruncatedSeries& a, unsigned exponent) {
  TruncatedSeries result = TruncatedSeries::one(a.order());
  TruncatedSeries base = a;
  while (exponent > 0) {
    if (exponent & 1U) result = ps_mul(result, base);
    exponent >>= 1U;
    if (exponent > 0) base = ps_mul(base, base);
  }
  return result;
}

TruncatedSeries ps_reciprocal(const TruncatedSeries& a) {
  if (a[0] == 0) fail(ErrorKind::non_unit, "reciprocal of a series with zero constant term");
  const std::size_t n = a.order();
  TruncatedSeries r(n);
  const Rational inv0 = 1 / a[0];
  r[0] = inv0;
  Rational acc;
  for (std::size_t k = 1; k <= n; ++k) {
    acc = 0;
    for (std::size_t j = 1; j <= k; ++j) {
      if (a[j] != 0) acc += a[j] * r[k - j];
    }
    r[k] = -acc * inv0;
  }
  return r;
}

TruncatedSeries ps_compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
  if (inner[0] != 0) fail(ErrorKind::domain, "composition requires an inner series without constant term");
  const std::size_t n = std::min(outer.order(), inner.order());
  TruncatedSeries acc(n);
  for (std::size_t k = outer.order() + 1; k-- > 0;) {
    acc = ps_mul(acc, inner.truncated(n));
    acc[0] += outer[k];
  }
  return acc;
}

TruncatedSeries ps_derivative(const TruncatedSeries& a) {
  if (a.order() == 0) return TruncatedSeries(0);
  TruncatedSeries d(a.order() - 1);
  for (std::size_t i = 1; i <= a.order(); ++i) d[i - 1] = a[i] * static_cast<unsigned long>(i);
  return d;
}

TruncatedSeries ps_shift(const TruncatedSeries& a, std::size_t k) {
  TruncatedSeries r(a.order());
  for (std::size_t i = 0; i + k <= a.order(); ++i) r[i + k] = a[i];
  return r;
}

TruncatedSeries rational_to_series(const Polynomial& num, const Polynomial& den, std::size_t order) {
  if (den.coeff(0) == 0) fail(ErrorKind::domain, "denominator vanishes at the origin (pole at 0)");
  return ps_mul(TruncatedSeries::from_polynomial(num, order),
                ps_reciprocal(TruncatedSeries::from_polynomial(den, order)));
}

TruncatedSeries CountSeries::egf() const {
  std::vector<Rational> c;
  c.reserve(counts.size());
  for (std::size_t n = 0; n < counts.size(); ++n) {
    Rational q(counts[n], factorial(static_cast<unsigned>(n)));
    q.canonicalize();
    c.push_back(std::move(q));
  }
  return TruncatedSeries(std::move(c), order());
}

CountSeries CountSeries::truncated(std::size_t order) const {
  CountSeries out{std::vector<Integer>(counts.begin(), counts.begin() + static_cast<long>(std::min(order + 1, counts.size()))),
                  provenance};
  return out;
}

void CountSeries::validate() const {
  if (counts.empty()) fail(ErrorKind::verification, "empty count series");
  if (counts[0] != 1 || (counts.size() > 1 && counts[1] != 1)) {
    fail(ErrorKind::verification, "count series must start 1, 1");
  }
  for (std::size_t n = 0; n < counts.size(); ++n) {
    if (counts[n] < 0 || counts[n] > factorial(static_cast<unsigned>(n))) {
      fail(ErrorKind::verification, "c_" + std::to_string(n) + " outside [0, n!]");
    }
  }
}

CountSeries counts_from_egf(const TruncatedSeries& egf, std::string provenance) {
  CountSeries out{{}, std::move(provenance)};
  for (std::size_t n = 0; n <= egf.order(); ++n) {
    Rational v = egf[n] * factorial(static_cast<unsigned>(n));
    if (v.get_den() != 1) fail(ErrorKind::invalid_input, "coefficient " + std::to_string(n) + " is not integral");
    out.counts.push_back(v.get_num());
  }
  return out;
}

}  // namespace cpap
