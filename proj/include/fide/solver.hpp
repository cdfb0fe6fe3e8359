#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fide/core.hpp"

namespace fide {

struct SolveResult {
  Mesh mesh;
  SchemeKind scheme;
  std::vector<double> values;                 // phi_0..phi_n
  std::optional<std::vector<double>> errors;  // phi_exact - phi_num, when known
  std::vector<double> pivots;                 // |diagonal| of rows 1..n, index k-1
};

/// Row k of the lower-triangular system: sum_j weights[j] phi_j = rhs.
struct AssembledRow {
  std::vector<double> weights;
  double rhs = 0.0;
};

AssembledRow assemble_row(std::size_t k, const ProblemSpec& problem, SchemeKind scheme,
                          const Mesh& mesh, const QuadratureRule& rule);

/// Forward substitution over k = 1..n with phi_0 = delta.
SolveResult solve(const ProblemSpec& problem, SchemeKind scheme, std::size_t n,
                  const QuadratureRule& rule);
SolveResult solve(const ProblemSpec& problem, SchemeKind scheme, std::size_t n);

/// max_k |sum_j w_kj phi_j - f(x_k)| over the system that produced `result`.
double residual(const SolveResult& result, const ProblemSpec& problem,
                const QuadratureRule& rule);

}  // namespace fide
