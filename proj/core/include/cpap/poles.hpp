#pragma once

// Roots of B_j(x) = -1 for B(x) = x/(1+x^{m-2}): the poles of the iterated
// cluster series. Depth 0 is x = -1; a depth-j root x solves B(x) = y for a
// depth-(j-1) root y, i.e. y x^{m-2} - x + y = 0.

#include "cpap/numeric.hpp"

#include <boost/multiprecision/cpp_complex.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace cpap {

using Complex = boost::multiprecision::cpp_complex_50;

struct PoleRoot {
  Complex x;
  /// One symbol per level: '+'/'-' for the two branches C_+/C_- when m = 4,
  /// otherwise the root index (0 = largest modulus) in base 36.
  std::string branch;
  /// |B_depth(x) + 1| evaluated forward at working precision.
  double certificate = 0;
};

struct PoleSet {
  int m = 4;
  int depth = 0;
  std::vector<PoleRoot> roots;

  void write_csv(std::ostream& out) const;
};

enum class PoleMode { single, all };

inline constexpr double kPoleCertificateTolerance = 1e-9;

/// C_+(t) and C_-(t) = (1 +- sqrt(1 - 4t^2)) / (2t), principal square root.
Complex c_plus(const Complex& t);
Complex c_minus(const Complex& t);

/// B_j(x) by forward iteration.
Complex iterate_B(int m, const Complex& x, int j);

/// mode=single follows C_+ (m = 4) or the largest-modulus root (general m).
/// mode=all keeps every branch; at most 4096 roots.
/// Non-convergence error (with the branch word) if a root cannot be polished
/// or fails the forward certificate.
PoleSet pole_chain(int m, int depth, PoleMode mode);

/// The series 1 + sum_{n>=1} prod_{j=1}^n A(beta_j), beta_1 = -1/2,
/// beta_{j+1} = B(beta_j): the value at x_J of the tail factor shared by every
/// pole. Computed with 8 guard digits.
BigFloat v_constant(unsigned precision_digits);

/// |T_N(x)| for the truncated iterated sum, summing until the terms drop below
/// 1e-40 (or max_terms).
double iterated_sum_magnitude(int m, const Complex& x, std::size_t max_terms = 100000);

struct DivergenceCheck {
  std::vector<double> offsets;     // relative offsets delta
  std::vector<double> magnitudes;  // |T(x (1 + delta))|
  bool diverges = false;           // increasing and above threshold at the closest offset
};

/// Evaluates the iterated sum on approach to a pole.
DivergenceCheck divergence_check(int m, const Complex& pole, double threshold = 1e6);

}  // namespace cpap
