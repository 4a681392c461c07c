#include "cpap/map_chain.hpp"

#include "cpap/errors.hpp"

namespace cpap {

namespace {

// y / (1 + y^e) for a series y without constant term.
TruncatedSeries over_one_plus_power(const TruncatedSeries& y, unsigned e) {
  TruncatedSeries den = ps_pow(y, e);
  den[0] += 1;
  return ps_mul(y, ps_reciprocal(den));
}

}  // namespace

MapChain::MapChain(int m, std::size_t order) : m_(m), order_(order) {
  if (m < 4) fail(ErrorKind::domain, "map chain needs m >= 4");
  B_.push_back(TruncatedSeries::x(order));
}

Rational MapChain::A(const Rational& x) const {
  const Rational den = 1 + x;
  if (den == 0) fail(ErrorKind::domain, "A has a pole at -1");
  return Rational(x / den);
}

Rational MapChain::B(const Rational& x) const {
  Rational p = 1;
  for (int i = 0; i < m_ - 2; ++i) p *= x;
  const Rational den = 1 + p;
  if (den == 0) fail(ErrorKind::domain, "B has a pole");
  return Rational(x / den);
}

const TruncatedSeries& MapChain::B_series(std::size_t j) {
  while (B_.size() <= j) B_.push_back(over_one_plus_power(B_.back(), static_cast<unsigned>(m_ - 2)));
  return B_[j];
}

TruncatedSeries MapChain::A_series(std::size_t j) { return over_one_plus_power(B_series(j), 1); }

SignedClusterSeries iterate_T(int m, std::size_t N) {
  MapChain chain(m, N);
  TruncatedSeries T = TruncatedSeries::one(N);
  TruncatedSeries product = TruncatedSeries::one(N);
  for (std::size_t n = 0; n < N; ++n) {
    product = ps_mul(product, chain.A_series(n));
    T += product;
  }
  return SignedClusterSeries::from_ogf(T, "iterate(m=" + std::to_string(m) + ")");
}

}  // namespace cpap
