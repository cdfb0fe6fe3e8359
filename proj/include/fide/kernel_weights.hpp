#pragma once

#include <cstddef>
#include <vector>

#include "fide/core.hpp"

namespace fide {

/// Product-integration weights for int_0^{x_k} K(x_k, t) phi(t) dt ~= sum_j weights[j] * phi_j.
struct KernelRow {
  std::size_t k = 0;
  double h = 0.0;
  std::vector<double> weights;
};

struct LinearMoments {
  double s = 0.0;  // weight of the left node of [x_j, x_{j+1}]
  double t = 0.0;  // weight of the right node
};

/// S = h int_0^1 (1-p) K(kh, h(p+j)) dp, T = h int_0^1 p K(kh, h(p+j)) dp; 0 <= j <= k-1.
LinearMoments st_moments(std::size_t k, std::size_t j, const KernelFn& kernel,
                         const QuadratureRule& rule, double h);

/// Composite trapezoid-like row from linear interpolation on every subinterval.
KernelRow linear_kernel_row(std::size_t k, const KernelFn& kernel,
                            const QuadratureRule& rule, double h);

/// First-interval linear weights (a_k, b_k) for phi_0, phi_1.
LinearMoments ab_moments(std::size_t k, const KernelFn& kernel,
                         const QuadratureRule& rule, double h);

struct QuadraticMoments {
  double m = 0.0;  // phi_{j-2}
  double n = 0.0;  // phi_{j-1}
  double o = 0.0;  // phi_j
};

/// Moments of the quadratic interpolant through x_{j-2}, x_{j-1}, x_j over
/// [x_{j-1}, x_j]; 2 <= j <= k.
QuadraticMoments mno_moments(std::size_t k, std::size_t j, const KernelFn& kernel,
                             const QuadratureRule& rule, double h);

/// Row assembled from the closed case tables (k = 1, 2, 3, >= 4).
KernelRow quadratic_kernel_row(std::size_t k, const KernelFn& kernel,
                               const QuadratureRule& rule, double h);

/// Same row assembled by looping over subintervals and scattering each
/// interval's moments. Independent of the case tables; used to check them.
KernelRow quadratic_kernel_row_scatter(std::size_t k, const KernelFn& kernel,
                                       const QuadratureRule& rule, double h);

}  // namespace fide
