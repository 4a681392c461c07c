#pragma once

// Linear ODEs with polynomial coefficients, the printed library of ODEs whose
// solutions are reciprocals of avoider e.g.f.s, and their power-series
// solutions.

#include "cpap/class_registry.hpp"
#include "cpap/series.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace cpap {

/// sum_k p_k(x) y^{(k)}(x) = 0 together with y^{(k)}(0) for k < initial.size().
struct LinearODE {
  std::string name;
  std::vector<Polynomial> coeffs;  // p_0 .. p_r, p_r nonzero
  std::vector<Rational> initial;   // y(0), y'(0), ...

  [[nodiscard]] std::size_t order() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  [[nodiscard]] long max_degree() const;
  /// Integer coefficients with gcd 1; the lowest nonzero coefficient of p_r
  /// is positive.
  /// Initial values are kept.
  [[nodiscard]] LinearODE normalized() const;
  /// Same operator up to a nonzero scalar (initial values ignored).
  [[nodiscard]] bool same_operator(const LinearODE& other) const;
  /// e.g. "(x^2)*y' + (2)*y'''".
  [[nodiscard]] std::string str() const;
  /// Throws invalid-input when p_r is zero or the list is empty.
  void validate() const;
};

/// Classes with a printed ODE: 4.I, 4.IV, 4.VI, 4.VII, 5.I, 5.II, 5.V, 5.VI,
/// 5.XI, 5.XVI, 5.XXII, 5.XXV. No-known-equation error otherwise.
LinearODE ode_library(const ClassId& id);
std::vector<ClassId> classes_with_ode();

/// Avoiding 12...m: sum_{i<m} w^{(i)} = 0, w(0)=1, w'(0)=-1, w^{(k)}(0)=0 for 2<=k<=m-2.
LinearODE increasing_family_ode(int m);
Pattern increasing_family_pattern(int m);

/// Avoiding 1 2 ... a tau (a+1), tau a permutation of {a+2..m+2} (length m+2):
/// w^{(a+1)} + x^{m-a+1}/(m-a+1)! w' = 0, w(0)=1, w'(0)=-1, w^{(k)}(0)=0 for 2<=k<=a.
/// Requires 1 <= a <= m.
LinearODE a_family_ode(int m, int a);
/// The member with tau increasing.
Pattern a_family_pattern(int m, int a);

/// Unique series solution through order N. Each coefficient equation of the
/// ODE fixes one new Taylor coefficient; equations whose new coefficient is
/// already fixed by initial values are checked instead (verification error
/// if violated), and a vanishing pivot without initial value is a singular
/// error naming the index.
TruncatedSeries ode_series_solve(const LinearODE& ode, std::size_t N);

/// Coefficients 0..N-shift of L(y), shift = max(k - deg) over the terms, i.e.
/// every coefficient that only involves a_0..a_N.
TruncatedSeries ode_residual(const LinearODE& ode, const TruncatedSeries& y);

nlohmann::json to_json(const LinearODE& ode);
LinearODE linear_ode_from_json(const nlohmann::json& doc);

}  // namespace cpap
