#include "fide/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fide/caputo.hpp"
#include "fide/error.hpp"
#include "fide/kernel_weights.hpp"

namespace fide {

AssembledRow assemble_row(std::size_t k, const ProblemSpec& problem, SchemeKind scheme,
                          const Mesh& mesh, const QuadratureRule& rule) {
  if (k < 1 || k > mesh.n()) {
    throw Error(ErrorKind::OutOfRange, "row index must satisfy 1 <= k <= n");
  }
  const double h = mesh.h();
  const double alpha = problem.alpha();

  const CaputoRow caputo = scheme == SchemeKind::S1
                               ? linear_caputo_row(k, alpha, h)
                               : quadratic_caputo_row(k, alpha, h);
  const KernelRow kernel = scheme == SchemeKind::S2
                               ? quadratic_kernel_row(k, problem.kernel(), rule, h)
                               : linear_kernel_row(k, problem.kernel(), rule, h);

  AssembledRow row;
  row.weights.resize(k + 1);
  for (std::size_t j = 0; j <= k; ++j) {
    row.weights[j] = caputo.weights[j] - kernel.weights[j];
  }
  row.rhs = problem.forcing()(mesh.node(k));
  if (!std::isfinite(row.rhs)) {
    throw Error(ErrorKind::NonFiniteValue,
                "forcing not finite at x = " + std::to_string(mesh.node(k)));
  }
  return row;
}

SolveResult solve(const ProblemSpec& problem, SchemeKind scheme, std::size_t n,
                  const QuadratureRule& rule) {
  Mesh mesh(n);
  SolveResult result{mesh, scheme, std::vector<double>(n + 1, 0.0), std::nullopt, {}};
  result.pivots.reserve(n);
  auto& phi = result.values;
  phi[0] = problem.delta();

  const double pivot_floor = 1e3 * std::numeric_limits<double>::epsilon() *
                             std::pow(mesh.h(), -problem.alpha());

  for (std::size_t k = 1; k <= n; ++k) {
    const AssembledRow row = assemble_row(k, problem, scheme, mesh, rule);
    const double diag = row.weights[k];
    if (!(std::abs(diag) >= pivot_floor)) {
      throw Error(ErrorKind::NearSingularPivot,
                  "diagonal " + std::to_string(diag) + " at row " + std::to_string(k) +
                      " is below " + std::to_string(pivot_floor));
    }
    double acc = row.rhs;
    for (std::size_t j = 0; j < k; ++j) acc -= row.weights[j] * phi[j];
    phi[k] = acc / diag;
    if (!std::isfinite(phi[k])) {
      throw Error(ErrorKind::NonFiniteValue,
                  "solution not finite at node " + std::to_string(k));
    }
    result.pivots.push_back(std::abs(diag));
  }

  if (problem.has_exact()) {
    const auto& exact = *problem.exact();
    std::vector<double> err(n + 1);
    for (std::size_t k = 0; k <= n; ++k) err[k] = exact(mesh.node(k)) - phi[k];
    result.errors = std::move(err);
  }
  return result;
}

SolveResult solve(const ProblemSpec& problem, SchemeKind scheme, std::size_t n) {
  return solve(problem, scheme, n, gauss_legendre(kDefaultQuadOrder));
}

double residual(const SolveResult& result, const ProblemSpec& problem,
                const QuadratureRule& rule) {
  double worst = 0.0;
  for (std::size_t k = 1; k <= result.mesh.n(); ++k) {
    const AssembledRow row = assemble_row(k, problem, result.scheme, result.mesh, rule);
    double lhs = 0.0;
    for (std::size_t j = 0; j <= k; ++j) lhs += row.weights[j] * result.values[j];
    worst = std::max(worst, std::abs(lhs - row.rhs));
  }
  return worst;
}

}  // namespace fide
