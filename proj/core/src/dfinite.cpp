#include "cpap/dfinite.hpp"

#include "cpap/errors.hpp"
#include "cpap/linalg.hpp"
#include "cpap/modular.hpp"

#include <utility>

namespace cpap {
namespace {

Integer falling(long j, long k) {
  Integer r = 1;
  for (long i = 0; i < k; ++i) r *= j - i;
  return r;
}

// Row n: coefficient of x^n in sum_{k,d} p_{k,d} x^d y^{(k)}, unknown (k,d)
// stored at k*(D+1)+d.
IntMatrix build_system(const TruncatedSeries& s, int R, int D) {
  const long N = static_cast<long>(s.order());
  IntMatrix rows;
  for (long n = 0; n <= N - R; ++n) {
    std::vector<Rational> row(static_cast<std::size_t>((R + 1) * (D + 1)));
    for (int k = 0; k <= R; ++k)
      for (int d = 0; d <= D && d <= n; ++d) {
        long idx = n - d + k;
        row[static_cast<std::size_t>(k * (D + 1) + d)] =
            Rational(falling(idx, k)) * s[static_cast<std::size_t>(idx)];
      }
    rows.push_back(clear_denominators(row));
  }
  return rows;
}

bool annihilates(const std::vector<Integer>& row, const std::vector<Integer>& v) {
  Integer acc = 0;
  for (std::size_t j = 0; j < v.size(); ++j) acc += row[j] * v[j];
  return sgn(acc) == 0;
}

LinearODE to_ode(const std::vector<Integer>& v, int R, int D, const TruncatedSeries& s) {
  LinearODE ode;
  ode.name = "fit";
  for (int k = 0; k <= R; ++k) {
    std::vector<Rational> c;
    for (int d = 0; d <= D; ++d) c.emplace_back(v[static_cast<std::size_t>(k * (D + 1) + d)]);
    ode.coeffs.emplace_back(std::move(c));
  }
  while (!ode.coeffs.empty() && ode.coeffs.back().is_zero()) ode.coeffs.pop_back();
  for (std::size_t k = 0; k < ode.order() && k <= s.order(); ++k)
    ode.initial.push_back(s[k] * Rational(factorial(static_cast<unsigned>(k))));
  return ode.normalized();
}

}  // namespace

std::size_t fit_equation_count(const TruncatedSeries& series, int r) {
  const long rows = static_cast<long>(series.order()) - r + 1;
  return rows > 0 ? static_cast<std::size_t>(rows) : 0;
}

std::optional<LinearODE> dfinite_fit(const TruncatedSeries& series, int max_order, int max_degree,
                                     const FitOptions& options) {
  if (max_order < 0 || max_degree < 0) fail(ErrorKind::domain, "fit bounds must be nonnegative");
  const std::uint64_t p = modular::large_primes(1).front();

  for (int sum = 0; sum <= max_order + max_degree; ++sum)
    for (int r = 0; r <= std::min(sum, max_order); ++r) {
      const int d = sum - r;
      if (d > max_degree) continue;
      const std::size_t unknowns = static_cast<std::size_t>((r + 1) * (d + 1));
      const std::size_t eqs = fit_equation_count(series, r);
      // A one-dimensional training nullspace needs unknowns-1 rows.
      if (eqs < unknowns - 1 + options.holdout)
        fail(ErrorKind::budget, "fit at (order " + std::to_string(r) + ", degree " + std::to_string(d) + ") needs " +
                                    std::to_string(unknowns - 1 + options.holdout + r) + " terms, have " +
                                    std::to_string(series.order() + 1));

      IntMatrix full = build_system(series, r, d);
      if (rank_mod_p(full, p) == unknowns) continue;

      IntMatrix train(full.begin(), full.end() - static_cast<long>(options.holdout));
      auto basis = nullspace(std::move(train), unknowns);
      if (basis.empty()) continue;
      bool confirmed = true;
      for (const auto& v : basis)
        for (std::size_t i = eqs - options.holdout; i < eqs && confirmed; ++i)
          confirmed = annihilates(full[i], v);
      if (!confirmed) continue;
      // An operator with p_r = 0 belongs to a smaller order already swept.
      const auto& v = basis.front();
      bool top = false;
      for (int k = 0; k <= d; ++k) top = top || sgn(v[static_cast<std::size_t>(r * (d + 1) + k)]) != 0;
      if (!top) continue;
      return to_ode(v, r, d, series);
    }
  return std::nullopt;
}

}  // namespace cpap
