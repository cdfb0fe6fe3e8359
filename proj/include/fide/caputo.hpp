#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace fide {

/// Discrete Caputo operator at node k: D^alpha phi(x_k) ~= sum_j weights[j] * phi_j.
struct CaputoRow {
  std::size_t k = 0;
  double alpha = 0.0;
  double h = 0.0;
  std::vector<double> weights;  // weights[j] multiplies phi_j, j = 0..k
};

/// h^-alpha / Gamma(2 - alpha), the common factor of both rows.
double caputo_scale(double alpha, double h);

/// Piecewise-linear (L1) row.
CaputoRow linear_caputo_row(std::size_t k, double alpha, double h);

/// a_m = (m+1)^(1-alpha) - m^(1-alpha).
double quad_coeff_a(std::size_t m, double alpha);

struct QuadCoeffsBCD {
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
};

/// Weights of phi_{j-2}, phi_{j-1}, phi_j from the quadratic interpolant on
/// [x_{j-1}, x_j], with m = k - j and the convention 0^(1-alpha) = 0.
QuadCoeffsBCD quad_coeffs_bcd(std::size_t m, double alpha);

/// Linear on the first interval, quadratic through three nodes on the rest.
CaputoRow quadratic_caputo_row(std::size_t k, double alpha, double h);

/// Throws LengthMismatch unless values.size() == k + 1.
double apply_caputo(const CaputoRow& row, std::span<const double> values);

}  // namespace fide
