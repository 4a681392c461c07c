#include "cpap/errors.hpp"
#include "cpap/poles.hpp"

#include "doctest.h"

#include <sstream>

using namespace cpap;

namespace {

bool near(const Complex& z, double re, double im, double tol) {
  return std::abs(static_cast<double>(real(z)) - re) < tol && std::abs(static_cast<double>(imag(z)) - im) < tol;
}

bool contains(const PoleSet& s, double re, double im, double tol = 5e-6) {
  for (const auto& r : s.roots) {
    if (near(r.x, re, im, tol)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("m = 4 pole chain values") {
  const auto d0 = pole_chain(4, 0, PoleMode::all);
  REQUIRE(d0.roots.size() == 1);
  CHECK(near(d0.roots[0].x, -1, 0, 1e-30));

  const auto d1 = pole_chain(4, 1, PoleMode::all);
  CHECK(d1.roots.size() == 2);
  CHECK(contains(d1, -0.5, -0.866025));
  CHECK(contains(d1, -0.5, 0.866025));

  const auto d2 = pole_chain(4, 2, PoleMode::all);
  for (double s : {1.0, -1.0}) {
    CHECK(contains(d2, -0.351597, s * 1.49853));
    CHECK(contains(d2, -0.148403, s * 0.632502));
  }
  const auto d3 = pole_chain(4, 3, PoleMode::all);
  CHECK(d3.roots.size() == 8);
  for (double s : {1.0, -1.0}) {
    CHECK(contains(d3, -0.0966266, s * 1.36268));
    CHECK(contains(d3, -0.281881, s * 1.99093));
    CHECK(contains(d3, -0.0517763, s * 0.730177));
    CHECK(contains(d3, -0.069716, s * 0.492406));
  }
  const auto single = pole_chain(4, 3, PoleMode::single);
  REQUIRE(single.roots.size() == 1);
  CHECK(near(single.roots[0].x, -0.0966266, -1.36268, 5e-6));
  CHECK(single.roots[0].branch == "+++");
}

TEST_CASE("m = 4 pole invariants") {
  std::vector<Complex> seen;
  for (int j = 0; j <= 6; ++j) {
    const auto s = pole_chain(4, j, PoleMode::all);
    CHECK(s.roots.size() == (std::size_t{1} << static_cast<unsigned>(j)));
    for (const auto& r : s.roots) {
      CHECK(real(r.x) < 0);
      CHECK(r.certificate < kPoleCertificateTolerance);
      for (const auto& other : seen) CHECK(abs(other - r.x) > 1e-12);
      seen.push_back(r.x);
    }
  }
}

TEST_CASE("general m levels solve x^{m-2} + x + 1 = 0 first") {
  const auto s = pole_chain(5, 1, PoleMode::all);
  CHECK(s.roots.size() == 3);
  for (const auto& r : s.roots) CHECK(abs(r.x * r.x * r.x + r.x + Complex(1)) < 1e-40);
  const auto deep = pole_chain(6, 4, PoleMode::single);
  CHECK(deep.roots.size() == 1);
  CHECK(deep.roots[0].branch == "0000");
  CHECK(deep.roots[0].certificate < kPoleCertificateTolerance);
  CHECK_THROWS_AS(pole_chain(4, 13, PoleMode::all), Error);
}

TEST_CASE("v constant") {
  const BigFloat v = v_constant(30);
  CHECK(abs(v - BigFloat("0.427119583148")) < BigFloat("5e-13"));
  CHECK(abs(v - v_constant(40)) < BigFloat("1e-30"));
  // v is also the value of the tail sum with a pole's forward orbit.
  CHECK(std::abs(static_cast<double>(v) - 0.427119583148) < 1e-12);
}

TEST_CASE("partial sums blow up approaching a pole") {
  for (int j = 1; j <= 3; ++j) {
    const auto s = pole_chain(4, j, PoleMode::single);
    const auto check = divergence_check(4, s.roots[0].x);
    CHECK(check.diverges);
  }
  // Away from poles the sum stays bounded.
  CHECK(iterated_sum_magnitude(4, Complex(0.2)) < 10);
}

TEST_CASE("csv") {
  std::ostringstream out;
  pole_chain(4, 1, PoleMode::all).write_csv(out);
  CHECK(out.str().rfind("depth,branch,re,im,certificate\n1,+,", 0) == 0);
}
