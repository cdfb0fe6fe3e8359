#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fide/analysis.hpp"
#include "fide/core.hpp"

namespace fide {

/// Closed-form maxima of |phi''| and |phi'''| over [0, b], 0 < b <= 1.
struct DerivativeMaxima {
  std::function<double(double)> second;
  std::function<double(double)> third;
};

/// Expression-language spelling of a problem, used for config round-trips.
struct ProblemText {
  std::string f;
  std::string kernel;
  std::optional<std::string> exact;
};

struct BuiltinProblem {
  ProblemSpec spec;
  std::string key;  // CLI name, e.g. "ex5.1"
  double kernel_bound = 0.0;
  std::optional<DerivativeMaxima> derivatives;  // nullopt: phi'' unbounded on [0, 1]
  ProblemText text;

  bool bounded() const noexcept { return derivatives.has_value(); }
  double max2() const;
  double max3() const;
};

/// phi = x^2 - x, alpha = 1/2, K = x t.
BuiltinProblem example_5_1();
/// phi = x - x^3, alpha = 5/6, K = x e^t.
BuiltinProblem example_5_2();
/// phi = x^(3/2), alpha = 1/3, K = x t + x^2 t^2. Derivative maxima unbounded.
BuiltinProblem example_5_3();

std::vector<BuiltinProblem> builtin_problems();
/// nullopt if `key` is not one of ex5.1, ex5.2, ex5.3.
std::optional<BuiltinProblem> find_builtin(std::string_view key);

/// Inputs for the error bounds at row k; throws Unbounded for example 5.3.
BoundInputs bound_inputs(const BuiltinProblem& problem, const Mesh& mesh, std::size_t k);

/// Parses `key = value` lines (name, alpha, delta, f, kernel, exact).
ProblemSpec load_problem(std::string_view config);
ProblemSpec load_problem_file(const std::string& path);

/// Inverse of load_problem for problems with an expression spelling.
std::string serialize_problem(const BuiltinProblem& problem);

}  // namespace fide
