#include "cpap/errors.hpp"
#include "cpap/series.hpp"
#include "cpap/series_json.hpp"

#include "doctest.h"

#include <random>

using namespace cpap;

namespace {

TruncatedSeries poly(std::initializer_list<long> c, std::size_t order) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return TruncatedSeries(v, order);
}

TruncatedSeries exp_series(std::size_t order) {
  std::vector<Rational> v;
  for (std::size_t n = 0; n <= order; ++n) v.emplace_back(Rational(1, factorial(static_cast<unsigned>(n))));
  return TruncatedSeries(v, order);
}

TruncatedSeries random_series(std::mt19937& rng, std::size_t order, bool unit) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 5);
  std::vector<Rational> v;
  for (std::size_t i = 0; i <= order; ++i) {
    Rational r(num(rng), den(rng));
    r.canonicalize();
    v.push_back(r);
  }
  if (unit && v[0] == 0) v[0] = 1;
  return TruncatedSeries(v, order);
}

}  // namespace

TEST_CASE("products") {
  CHECK(ps_mul(poly({1, 1}, 4), poly({1, -1}, 4)) == poly({1, 0, -1}, 4));
  const auto e = exp_series(4);
  CHECK(ps_mul(e, TruncatedSeries::one(4)) == e);
  const auto sq = ps_mul(e, e);
  CHECK(sq.coeffs() == std::vector<Rational>{1, 2, 2, Rational(4, 3), Rational(2, 3)});
  CHECK(ps_mul(poly({1, 2, 3}, 6), poly({1}, 3)).order() == 3);
}

TEST_CASE("reciprocal") {
  const auto r = ps_reciprocal(poly({1, -1}, 6));
  for (std::size_t i = 0; i <= 6; ++i) CHECK(r[i] == 1);
  CHECK_THROWS_AS(ps_reciprocal(poly({0, 1}, 4)), Error);
  std::mt19937 rng(11);
  for (int t = 0; t < 20; ++t) {
    const auto a = random_series(rng, 8, true);
    CHECK(ps_mul(a, ps_reciprocal(a)) == TruncatedSeries::one(8));
    CHECK(ps_reciprocal(ps_reciprocal(a)) == a);
  }
}

TEST_CASE("composition") {
  const std::size_t N = 9;
  const auto A = rational_to_series(Polynomial({0, 1}), Polynomial({1, 1}), N);
  const auto B = rational_to_series(Polynomial({0, 1}), Polynomial({1, 0, 1}), N);
  CHECK(A == poly({0, 1, -1, 1, -1, 1, -1, 1, -1, 1}, N));
  CHECK(B == poly({0, 1, 0, -1, 0, 1, 0, -1, 0, 1}, N));
  CHECK(ps_compose(A, TruncatedSeries::x(N)) == A);
  const auto B2 = ps_compose(B, B);
  CHECK(B2[1] == 1);
  CHECK(B2[3] == -2);
  CHECK(B2[5] == 5);
  // x(1+x^2) / ((1+x^2)^2 + x^2), expanded independently.
  const auto direct = rational_to_series(Polynomial({0, 1, 0, 1}), Polynomial({1, 0, 3, 0, 1}), N);
  CHECK(B2 == direct);
  const auto AB = ps_compose(A, B);
  CHECK(AB[1] == 1);
  CHECK(AB[2] == -1);
  CHECK_THROWS_AS(ps_compose(A, poly({1, 1}, N)), Error);
  CHECK_THROWS_AS(rational_to_series(Polynomial({1}), Polynomial({0, 1}), N), Error);
}

TEST_CASE("ring laws on random truncations") {
  std::mt19937 rng(3);
  for (int t = 0; t < 25; ++t) {
    const auto a = random_series(rng, 7, false);
    const auto b = random_series(rng, 7, false);
    const auto c = random_series(rng, 7, false);
    CHECK(ps_mul(a, b) == ps_mul(b, a));
    CHECK(ps_mul(ps_mul(a, b), c) == ps_mul(a, ps_mul(b, c)));
    CHECK(ps_mul(a, ps_add(b, c)) == ps_add(ps_mul(a, b), ps_mul(a, c)));
    CHECK(ps_add(a, b) == ps_add(b, a));
  }
}

TEST_CASE("composition is associative and respects valuations") {
  std::mt19937 rng(5);
  for (int t = 0; t < 10; ++t) {
    auto f = random_series(rng, 6, false);
    auto g = random_series(rng, 6, false);
    auto h = random_series(rng, 6, false);
    g[0] = 0;
    h[0] = 0;
    if (g[1] == 0) g[1] = 1;
    if (h[1] == 0) h[1] = 2;
    CHECK(ps_compose(ps_compose(f, g), h) == ps_compose(f, ps_compose(g, h)));
    auto f1 = f;
    f1[0] = 0;
    f1[1] = 0;
    if (f1[2] == 0) f1[2] = 1;
    auto g2 = g;
    g2[1] = 0;
    if (g2[2] == 0) g2[2] = 1;
    CHECK(ps_compose(f1, g2).valuation() == 4);
  }
}

TEST_CASE("valuation") {
  CHECK(TruncatedSeries(5).valuation() == 6);
  CHECK(poly({0, 0, 3}, 5).valuation() == 2);
}

TEST_CASE("json round trip") {
  CountSeries cs{{1, 1, 2, 6, 23}, "dp:1423"};
  CHECK(count_series_from_json(to_json(cs)) == cs);
  const auto e = exp_series(5);
  CHECK(truncated_series_from_json(to_json(e, "exp")) == e);
  auto bad = to_json(cs);
  bad["order"] = 7;
  CHECK_THROWS_AS(count_series_from_json(bad), Error);
  CHECK(to_json(cs)["values"][4] == "23");
}

TEST_CASE("count series validation and egf") {
  CountSeries cs{{1, 1, 2, 6, 23}, "x"};
  CHECK_NOTHROW(cs.validate());
  CHECK(cs.egf()[4] == Rational(23, 24));
  CHECK(counts_from_egf(cs.egf(), "x") == cs);
  CountSeries bad{{1, 1, 3}, "x"};
  CHECK_THROWS_AS(bad.validate(), Error);
}
