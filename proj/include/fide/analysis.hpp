#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fide/core.hpp"
#include "fide/solver.hpp"

namespace fide {

/// Below this MAE the convergence order is noise and is not reported.
inline constexpr double kMaeNoiseFloor = 1e-12;

/// Maximum absolute nodal error; throws MissingExact without an exact solution.
double mae(const SolveResult& result);

/// log2(mae_coarse / mae_fine); both must be positive.
double convergence_order(double mae_coarse, double mae_fine);

struct ConvergenceRow {
  std::size_t n = 0;
  double h = 0.0;
  double mae = 0.0;
  std::optional<double> co;  // absent on the first row or below the noise floor
};

struct ConvergenceReport {
  SchemeKind scheme = SchemeKind::S1;
  std::string problem_name;
  std::vector<ConvergenceRow> rows;
};

/// Throws InvalidArgument unless the ladder is non-empty and each n doubles the last.
void validate_ladder(std::span<const std::size_t> n_list);

/// One solve per n (run concurrently), rows ordered by decreasing h.
ConvergenceReport convergence_study(const ProblemSpec& problem, SchemeKind scheme,
                                    std::span<const std::size_t> n_list,
                                    const QuadratureRule& rule);

/// Inputs to the a priori error bounds. Derivative maxima are supplied by the
/// caller; this module never differentiates numerically.
struct BoundInputs {
  double alpha = 0.0;
  double h = 0.0;
  double x_k = 0.0;
  double x_1 = 0.0;
  double max2_first = 0.0;  // max |phi''| on [x_0, x_1]
  double max2 = 0.0;        // max |phi''| on [x_0, x_k]
  double max3 = 0.0;        // max |phi'''| on [x_0, x_k]
  double kernel_bound = 0.0;  // M with |K| <= M on the unit square
};

/// Linear scheme.
double bound_s1(const BoundInputs& in);
/// Quadratic scheme; k = 1 and k >= 2 use different formulas.
double bound_s2(std::size_t k, const BoundInputs& in);
/// Quadratic-linear scheme.
double bound_s3(std::size_t k, const BoundInputs& in);
double theorem_bound(SchemeKind scheme, std::size_t k, const BoundInputs& in);

}  // namespace fide
