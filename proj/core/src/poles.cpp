#include "cpap/poles.hpp"

#include "cpap/errors.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace cpap {

namespace {

using Real = boost::multiprecision::cpp_bin_float_50;

constexpr std::size_t kMaxRoots = 4096;

Complex power(const Complex& x, int e) {
  Complex r(1);
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

Complex B(int m, const Complex& x) { return x / (Complex(1) + power(x, m - 2)); }

// Roots of y x^d - x + y, d >= 2, by Durand-Kerner then Newton.
std::vector<Complex> level_roots(int d, const Complex& y, const std::string& trace) {
  const auto f = [&](const Complex& x) { return y * power(x, d) - x + y; };
  const auto df = [&](const Complex& x) { return Complex(d) * y * power(x, d - 1) - Complex(1); };

  // Cauchy bound for the monic polynomial x^d - x/y + 1.
  const Real radius = 1 + std::max(Real(1), Real(abs(Complex(1) / y)));
  std::vector<Complex> z(static_cast<std::size_t>(d));
  const Complex seed(Real("0.4"), Real("0.9"));
  Complex p = Complex(1);
  for (auto& zi : z) {
    p *= seed;
    zi = p * Complex(radius);
  }
  const Real tol("1e-45");
  bool converged = false;
  for (int iter = 0; iter < 2000 && !converged; ++iter) {
    Real change = 0;
    for (std::size_t i = 0; i < z.size(); ++i) {
      Complex den = y;
      for (std::size_t j = 0; j < z.size(); ++j) {
        if (j != i) den *= (z[i] - z[j]);
      }
      const Complex step = f(z[i]) / den;
      z[i] -= step;
      change = std::max(change, Real(abs(step)));
    }
    converged = change < tol;
  }
  for (auto& zi : z) {
    for (int k = 0; k < 8; ++k) {
      const Complex d1 = df(zi);
      if (abs(d1) == 0) break;
      zi -= f(zi) / d1;
    }
    if (abs(f(zi)) > Real("1e-40")) fail(ErrorKind::non_convergence, "root polishing failed on branch " + trace);
  }
  std::sort(z.begin(), z.end(), [](const Complex& a, const Complex& b) {
    const Real ma = abs(a);
    const Real mb = abs(b);
    if (abs(ma - mb) > Real("1e-30")) return ma > mb;
    return arg(a) < arg(b);
  });
  return z;
}

char index_symbol(std::size_t i) {
  return static_cast<char>(i < 10 ? '0' + static_cast<int>(i) : 'a' + static_cast<int>(i) - 10);
}

}  // namespace

Complex c_plus(const Complex& t) { return (Complex(1) + sqrt(Complex(1) - Complex(4) * t * t)) / (Complex(2) * t); }
Complex c_minus(const Complex& t) { return (Complex(1) - sqrt(Complex(1) - Complex(4) * t * t)) / (Complex(2) * t); }

Complex iterate_B(int m, const Complex& x, int j) {
  Complex y = x;
  for (int i = 0; i < j; ++i) y = B(m, y);
  return y;
}

PoleSet pole_chain(int m, int depth, PoleMode mode) {
  if (m < 4) fail(ErrorKind::domain, "pole chains need m >= 4");
  if (depth < 0) fail(ErrorKind::domain, "depth must be >= 0");
  const int d = m - 2;
  if (mode == PoleMode::all && std::pow(static_cast<double>(d), depth) > static_cast<double>(kMaxRoots)) {
    fail(ErrorKind::budget, "too many branches requested");
  }
  std::vector<PoleRoot> level{{Complex(-1), "", 0.0}};
  for (int j = 1; j <= depth; ++j) {
    std::vector<PoleRoot> next;
    for (const auto& parent : level) {
      if (m == 4) {
        next.push_back({c_plus(parent.x), parent.branch + '+', 0.0});
        if (mode == PoleMode::all) next.push_back({c_minus(parent.x), parent.branch + '-', 0.0});
        continue;
      }
      const auto roots = level_roots(d, parent.x, parent.branch);
      const std::size_t take = mode == PoleMode::all ? roots.size() : 1;
      for (std::size_t i = 0; i < take; ++i) next.push_back({roots[i], parent.branch + index_symbol(i), 0.0});
    }
    level = std::move(next);
  }
  PoleSet set{m, depth, std::move(level)};
  for (auto& r : set.roots) {
    const Complex residual = iterate_B(m, r.x, depth) + Complex(1);
    r.certificate = static_cast<double>(abs(residual));
    if (!(r.certificate < kPoleCertificateTolerance)) {
      fail(ErrorKind::non_convergence, "forward certificate failed on branch " + r.branch);
    }
  }
  return set;
}

void PoleSet::write_csv(std::ostream& out) const {
  out << "depth,branch,re,im,certificate\n";
  for (const auto& r : roots) {
    out << depth << ',' << (r.branch.empty() ? "-" : r.branch) << ',' << real(r.x).str(20) << ','
        << imag(r.x).str(20) << ',' << r.certificate << '\n';
  }
}

BigFloat v_constant(unsigned precision_digits) {
  if (precision_digits < 12) fail(ErrorKind::domain, "v_constant needs at least 12 digits");
  const unsigned work = precision_digits + 8;
  const PrecisionScope scope(work + 10);
  const BigFloat eps = pow(BigFloat(10), -static_cast<int>(work));
  BigFloat beta = BigFloat(-1) / 2;
  BigFloat product = 1;
  BigFloat v = 1;
  for (int n = 1; n < 1000000; ++n) {
    product *= beta / (1 + beta);
    v += product;
    if (abs(product) < eps) return v;
    beta = beta / (1 + beta * beta);
  }
  fail(ErrorKind::non_convergence, "v series did not converge");
}

double iterated_sum_magnitude(int m, const Complex& x, std::size_t max_terms) {
  Complex total(1);
  Complex product(1);
  Complex y = x;
  const Real small("1e-40");
  for (std::size_t n = 0; n < max_terms; ++n) {
    product *= y / (Complex(1) + y);
    total += product;
    if (abs(product) < small) break;
    y = B(m, y);
  }
  return static_cast<double>(abs(total));
}

DivergenceCheck divergence_check(int m, const Complex& pole, double threshold) {
  DivergenceCheck check;
  check.offsets = {1e-4, 1e-6, 1e-8, 1e-10};
  for (double delta : check.offsets) {
    const Complex x = pole * Complex(Real(1) + Real(delta));
    check.magnitudes.push_back(iterated_sum_magnitude(m, x));
  }
  check.diverges = std::is_sorted(check.magnitudes.begin(), check.magnitudes.end()) &&
                   check.magnitudes.back() >= threshold;
  return check;
}

}  // namespace cpap
