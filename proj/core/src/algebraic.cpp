#include "cpap/algebraic.hpp"

#include "cpap/errors.hpp"

namespace cpap {
namespace {

Polynomial poly(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return Polynomial(std::move(v));
}

Polynomial neg(const Polynomial& p) { return Polynomial() - p; }

}  // namespace

AlgebraicWitness tree_witness(int m) {
  switch (m) {
    case 4:
      return {"tree-4",
              {poly({1, 2, 4, 4}), neg(poly({2, 3, 6, 4})), poly({1, 1, 2, 1})}};
    case 5:
      return {"tree-5",
              {poly({1, 2, 6, 12, 8}), neg(poly({3, 5, 15, 24, 12})), poly({3, 4, 12, 15, 6}),
               neg(poly({1, 1, 3, 3, 1}))}};
    case 6:
      return {"tree-6",
              {poly({1, 2, 8, 24, 32, 16}), neg(poly({4, 7, 28, 72, 80, 32})), poly({6, 9, 36, 78, 72, 24}),
               neg(poly({4, 5, 20, 36, 28, 8})), poly({1, 1, 4, 6, 4, 1})}};
    case 7:
      return {"tree-7",
              {poly({1, 2, 10, 40, 80, 80, 32}), neg(poly({5, 9, 45, 160, 280, 240, 80})),
               poly({10, 16, 80, 250, 380, 280, 80}), neg(poly({10, 14, 70, 190, 250, 160, 40})),
               poly({5, 6, 30, 70, 80, 45, 10}), neg(poly({1, 1, 5, 10, 10, 5, 1}))}};
    default:
      fail(ErrorKind::domain, "no printed algebraic witness for m = " + std::to_string(m));
  }
}

AlgebraicCheck algebraic_verify(const AlgebraicWitness& witness, const TruncatedSeries& series) {
  const std::size_t N = series.order();
  // Horner in T.
  TruncatedSeries acc(N);
  for (std::size_t i = witness.coeffs.size(); i-- > 0;) {
    acc = ps_mul(acc, series);
    acc += TruncatedSeries::from_polynomial(witness.coeffs[i], N);
  }
  return {acc.valuation(), N};
}

TruncatedSeries hypergeometric_series(int m, std::size_t N) {
  if (m < 5) fail(ErrorKind::domain, "hypergeometric form needs m >= 5");
  std::vector<Rational> upper;
  for (int i = 1; i <= m - 3; ++i) upper.emplace_back(Integer(i), Integer(m - 2));
  std::vector<Rational> lower;
  for (int j = 2; j <= m - 4; ++j) lower.emplace_back(Integer(j), Integer(m - 3));
  lower.emplace_back(Integer(m - 2), Integer(m - 3));
  for (auto& q : upper) q.canonicalize();
  for (auto& q : lower) {
    q.canonicalize();
    if (q.get_den() == 1 && sgn(q) <= 0) fail(ErrorKind::domain, "nonpositive integer lower parameter");
  }
  Integer num, den;
  mpz_ui_pow_ui(num.get_mpz_t(), static_cast<unsigned long>(m - 2), static_cast<unsigned long>(m - 2));
  mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(m - 3), static_cast<unsigned long>(m - 3));
  const Rational arg = -Rational(num, den);

  TruncatedSeries g(N);
  Rational term = 1;
  const std::size_t step = static_cast<std::size_t>(m - 2);
  for (std::size_t n = 0, e = 1; e <= N; ++n, e += step) {
    g[e] = term;
    Rational ratio = arg / Rational(static_cast<long>(n + 1));
    for (const auto& a : upper) ratio *= a + Rational(static_cast<long>(n));
    for (const auto& b : lower) ratio /= b + Rational(static_cast<long>(n));
    term *= ratio;
  }
  return g;
}

TruncatedSeries hypergeometric_T(int m, std::size_t N) {
  auto g = hypergeometric_series(m, N);
  auto x = TruncatedSeries::x(N);
  auto one = TruncatedSeries::one(N);
  auto num = ps_sub(ps_add(one, ps_scale(x, 2)), g);
  auto den = ps_sub(ps_add(one, x), g);
  return ps_mul(num, ps_reciprocal(den));
}

}  // namespace cpap
