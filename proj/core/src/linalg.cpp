#include "cpap/linalg.hpp"

#include "cpap/errors.hpp"
#include "cpap/modular.hpp"

#include <utility>

namespace cpap {

std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t p) {
  using namespace modular;
  if (m.empty()) return 0;
  const std::size_t cols = m.front().size();
  std::vector<std::vector<u64>> a;
  a.reserve(m.size());
  for (const auto& row : m) {
    std::vector<u64> r(cols);
    for (std::size_t j = 0; j < cols; ++j) r[j] = reduce(row[j], p);
    a.push_back(std::move(r));
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rank]);
    const u64 inv = inv_mod(a[rank][c], p);
    for (std::size_t i = rank + 1; i < a.size(); ++i) {
      if (a[i][c] == 0) continue;
      const u64 f = mul_mod(a[i][c], inv, p);
      for (std::size_t j = c; j < cols; ++j) a[i][j] = sub_mod(a[i][j], mul_mod(f, a[rank][j], p), p);
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<Integer>> nullspace(IntMatrix m, std::size_t cols) {
  for (const auto& row : m)
    if (row.size() != cols) fail(ErrorKind::invalid_input, "ragged matrix");

  // Fraction-free elimination to row echelon form.
  std::vector<std::size_t> pivot_col;
  std::vector<bool> is_pivot(cols, false);
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && sgn(m[piv][c]) == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    pivot_col.push_back(c);
    is_pivot[c] = true;
    ++r;
  }

  std::vector<std::vector<Integer>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(cols);
    x[f] = 1;
    for (std::size_t k = pivot_col.size(); k-- > 0;) {
      const std::size_t pc = pivot_col[k];
      Rational acc = 0;
      for (std::size_t j = pc + 1; j < cols; ++j)
        if (sgn(x[j]) != 0 && sgn(m[k][j]) != 0) acc += Rational(m[k][j]) * x[j];
      x[pc] = -acc / Rational(m[k][pc]);
    }
    auto v = clear_denominators(x);
    Integer g = 0;
    for (const auto& e : v) g = gcd(g, e);
    for (const auto& e : v)
      if (sgn(e) != 0) {
        if (sgn(e) < 0) g = -g;
        break;
      }
    for (auto& e : v) e /= g;
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Integer> clear_denominators(const std::vector<Rational>& row) {
  Integer den = 1;
  for (const auto& q : row) den = lcm(den, Integer(q.get_den()));
  std::vector<Integer> out;
  out.reserve(row.size());
  for (const auto& q : row) out.push_back(q.get_num() * (den / q.get_den()));
  return out;
}

}  // namespace cpap
