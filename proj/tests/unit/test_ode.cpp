#include "cpap/algebraic.hpp"
#include "cpap/class_registry.hpp"
#include "cpap/cluster.hpp"
#include "cpap/dfinite.hpp"
#include "cpap/dp_enumerator.hpp"
#include "cpap/errors.hpp"
#include "cpap/ode.hpp"

#include "doctest.h"

using namespace cpap;

namespace {

// Taylor coefficients of sum_n (kn+1-x) x^{kn} / (kn+1)!, computed directly.
TruncatedSeries closed_form(unsigned k, std::size_t N) {
  TruncatedSeries s(N);
  for (std::size_t e = 0; e <= N; e += k) {
    s[e] = Rational(Integer(e + 1), factorial(static_cast<unsigned>(e + 1)));
    if (e + 1 <= N) s[e + 1] = -Rational(1, 1) / Rational(factorial(static_cast<unsigned>(e + 1)));
  }
  for (auto i = 0u; i <= N; ++i) s[i].canonicalize();
  return s;
}

LinearODE perturbed(LinearODE ode) {
  auto c = ode.coeffs[0].coeffs();
  if (c.empty()) c.emplace_back(0);
  c[0] += 1;
  ode.coeffs[0] = Polynomial(c);
  return ode;
}

}  // namespace

TEST_CASE("library contents") {
  const auto a = ode_library(ClassId::parse("4.I"));
  CHECK(a.order() == 3);
  CHECK(a.initial == std::vector<Rational>{1, -1, 0});
  const auto v = ode_library(ClassId::parse("5.V"));
  CHECK(v.order() == 2);
  CHECK(v.coeffs[1] == Polynomial::monomial(Rational(1), 3));
  CHECK(v.coeffs[2] == Polynomial::monomial(Rational(6), 0));
  CHECK(ode_library(ClassId::parse("5.XI")).initial.size() == 7);
  CHECK(ode_library(ClassId::parse("4.VII")).initial.size() == 3);
  CHECK_THROWS_AS(ode_library(ClassId::parse("4.V")), Error);
  try {
    ode_library(ClassId::parse("5.III"));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::no_known_equation);
  }
  CHECK(classes_with_ode().size() == 12);
}

TEST_CASE("families reproduce the printed ODEs") {
  CHECK(increasing_family_ode(4).same_operator(ode_library(ClassId::parse("4.I"))));
  CHECK(increasing_family_ode(5).same_operator(ode_library(ClassId::parse("5.XXV"))));
  CHECK(a_family_ode(2, 1).same_operator(ode_library(ClassId::parse("4.VI"))));
  CHECK(a_family_ode(2, 2).same_operator(ode_library(ClassId::parse("4.VII"))));
  CHECK(a_family_ode(3, 3).same_operator(ode_library(ClassId::parse("5.I"))));
  CHECK(a_family_ode(3, 2).same_operator(ode_library(ClassId::parse("5.II"))));
  CHECK(a_family_ode(3, 1).same_operator(ode_library(ClassId::parse("5.V"))));
  CHECK(a_family_pattern(2, 1) == Pattern::parse("1342"));
  CHECK(a_family_pattern(3, 2) == Pattern::parse("12453"));
  CHECK_THROWS_AS(a_family_ode(3, 4), Error);
}

TEST_CASE("closed forms") {
  CHECK(ode_series_solve(ode_library(ClassId::parse("4.I")), 60) == closed_form(4, 60));
  CHECK(ode_series_solve(ode_library(ClassId::parse("5.XXV")), 60) == closed_form(5, 60));
}

TEST_CASE("residuals vanish and a wrong operator does not") {
  for (const auto& id : classes_with_ode()) {
    const auto ode = ode_library(id);
    const auto y = ode_series_solve(ode, 50);
    CHECK_MESSAGE(ode_residual(ode, y).is_zero(), id.str());
    CHECK_MESSAGE(!ode_residual(perturbed(ode), y).is_zero(), id.str());
  }
}

TEST_CASE("reciprocals match the DP counts") {
  const unsigned N = 22;
  for (const auto& id : classes_with_ode()) {
    const auto y = ode_series_solve(ode_library(id), N);
    const auto counts = dp::count_series(canonical_representative(id), N);
    CHECK_MESSAGE(ps_reciprocal(y) == counts.egf(), id.str());
  }
  for (int m = 3; m <= 6; ++m) {
    const auto y = ode_series_solve(increasing_family_ode(m), 14);
    CHECK(ps_reciprocal(y) == dp::count_series(increasing_family_pattern(m), 14).egf());
  }
  for (int m = 2; m <= 4; ++m)
    for (int a = 1; a <= m; ++a) {
      const auto y = ode_series_solve(a_family_ode(m, a), 14);
      CHECK(ps_reciprocal(y) == dp::count_series(a_family_pattern(m, a), 14).egf());
    }
}

TEST_CASE("solver reports bad initial data") {
  auto ode = ode_library(ClassId::parse("5.XI"));
  ode.initial[6] = 5;
  CHECK_THROWS_AS(ode_series_solve(ode, 10), Error);
  auto short_ode = ode_library(ClassId::parse("4.IV"));
  short_ode.initial.resize(3);
  try {
    ode_series_solve(short_ode, 10);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::singular);
  }
}

TEST_CASE("json round trip") {
  const auto ode = ode_library(ClassId::parse("5.XI"));
  const auto back = linear_ode_from_json(to_json(ode));
  CHECK(back.coeffs == ode.coeffs);
  CHECK(back.initial == ode.initial);
  CHECK(to_json(a_family_ode(3, 2))["coefficients"][3][0] == "2");
}

TEST_CASE("fit recovers exp and a printed ODE") {
  TruncatedSeries e(30);
  for (unsigned n = 0; n <= 30; ++n) e[n] = Rational(Integer(1), factorial(n));
  const auto fit = dfinite_fit(e, 3, 3);
  REQUIRE(fit);
  CHECK(fit->order() == 1);
  CHECK(fit->max_degree() == 0);
  CHECK(fit->coeffs[1] == Polynomial::monomial(Rational(1), 0));
  CHECK(fit->coeffs[0] == Polynomial::monomial(Rational(-1), 0));

  const auto target = ode_library(ClassId::parse("5.II"));
  const auto y = ode_series_solve(target, 39);
  const auto got = dfinite_fit(y, 5, 6);
  REQUIRE(got);
  CHECK(got->same_operator(target));
  CHECK(got->initial == std::vector<Rational>{1, -1, 0});
  CHECK(dfinite_fit(y, 5, 6)->coeffs == got->coeffs);
}

TEST_CASE("fit budget and negative result") {
  TruncatedSeries e(8);
  for (unsigned n = 0; n <= 8; ++n) e[n] = Rational(Integer(1), factorial(n));
  CHECK_THROWS_AS(dfinite_fit(ps_mul(e, e), 4, 4), Error);
  // The 1423 cluster series has no small operator.
  auto t = signed_sum(clusters_onem(4, 60)).ogf();
  CHECK_FALSE(dfinite_fit(t, 3, 3));
}

TEST_CASE("algebraic witnesses") {
  const std::size_t N = 60;
  CHECK(algebraic_verify(tree_witness(4), signed_sum(clusters_tree(4, N)).ogf()).passed());
  for (int m = 5; m <= 7; ++m) {
    const auto T = hypergeometric_T(m, N);
    CHECK(algebraic_verify(tree_witness(m), T).passed());
    CHECK(T == signed_sum(clusters_tree(m, N)).ogf());
  }
  auto bad = tree_witness(5);
  auto c = bad.coeffs[2].coeffs();
  c[1] += 1;
  bad.coeffs[2] = Polynomial(c);
  const auto check = algebraic_verify(bad, hypergeometric_T(5, N));
  CHECK_FALSE(check.passed());
  CHECK(check.valuation < 5);
  CHECK_THROWS_AS(hypergeometric_series(4, 10), Error);
}
