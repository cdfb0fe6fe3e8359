#include "fide/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <string>

#include "fide/error.hpp"

namespace fide {

double mae(const SolveResult& result) {
  if (!result.errors) {
    throw Error(ErrorKind::MissingExact, "MAE needs an exact solution");
  }
  double worst = 0.0;
  for (double e : *result.errors) worst = std::max(worst, std::abs(e));
  return worst;
}

double convergence_order(double mae_coarse, double mae_fine) {
  if (!(mae_coarse > 0.0) || !(mae_fine > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "convergence order needs positive errors");
  }
  return std::log2(mae_coarse / mae_fine);
}

void validate_ladder(std::span<const std::size_t> n_list) {
  if (n_list.empty()) {
    throw Error(ErrorKind::InvalidArgument, "empty n ladder");
  }
  if (n_list.front() == 0) {
    throw Error(ErrorKind::InvalidArgument, "ladder entries must be positive");
  }
  for (std::size_t i = 1; i < n_list.size(); ++i) {
    if (n_list[i] != 2 * n_list[i - 1]) {
      throw Error(ErrorKind::InvalidArgument,
                  "ladder must double at each step: " + std::to_string(n_list[i - 1]) +
                      " is followed by " + std::to_string(n_list[i]));
    }
  }
}

ConvergenceReport convergence_study(const ProblemSpec& problem, SchemeKind scheme,
                                    std::span<const std::size_t> n_list,
                                    const QuadratureRule& rule) {
  validate_ladder(n_list);
  if (!problem.has_exact()) {
    throw Error(ErrorKind::MissingExact,
                "convergence study of '" + problem.name() + "' needs an exact solution");
  }

  std::vector<std::future<double>> jobs;
  jobs.reserve(n_list.size());
  for (std::size_t n : n_list) {
    jobs.push_back(std::async(std::launch::async, [&problem, scheme, n, &rule] {
      return mae(solve(problem, scheme, n, rule));
    }));
  }

  ConvergenceReport report{scheme, problem.name(), {}};
  report.rows.reserve(n_list.size());
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    ConvergenceRow row;
    row.n = n_list[i];
    row.h = 1.0 / static_cast<double>(n_list[i]);
    row.mae = jobs[i].get();
    if (i > 0) {
      const double prev = report.rows.back().mae;
      if (prev >= kMaeNoiseFloor && row.mae >= kMaeNoiseFloor) {
        row.co = convergence_order(prev, row.mae);
      }
    }
    report.rows.push_back(row);
  }
  return report;
}

namespace {

void validate(const BoundInputs& in) {
  if (!(in.alpha > 0.0 && in.alpha < 1.0)) {
    throw Error(ErrorKind::OutOfRange, "bound needs alpha in (0, 1)");
  }
  if (!(in.h > 0.0)) throw Error(ErrorKind::InvalidArgument, "bound needs h > 0");
  if (!(in.x_1 > 0.0 && in.x_1 <= in.x_k)) {
    throw Error(ErrorKind::InvalidArgument, "bound needs 0 < x_1 <= x_k");
  }
  for (double m : {in.max2_first, in.max2, in.max3, in.kernel_bound}) {
    if (std::isinf(m)) {
      throw Error(ErrorKind::Unbounded, "derivative maximum is unbounded");
    }
    if (!(m >= 0.0)) {
      throw Error(ErrorKind::InvalidArgument, "bound maxima must be non-negative");
    }
  }
}

// Shared k = 1 formula of the quadratic and quadratic-linear schemes.
double first_row_bound(const BoundInputs& in) {
  const double a = in.alpha;
  return a / (2.0 * gamma(3.0 - a)) * in.max2_first * std::pow(in.h, 2.0 - a) +
         0.5 * in.kernel_bound * in.max2_first * in.x_1 * in.h * in.h;
}

// Caputo part of the k >= 2 quadratic bound.
double quadratic_caputo_bound(const BoundInputs& in) {
  const double a = in.alpha;
  const double h = in.h;
  if (!(in.x_k > in.x_1)) {
    throw Error(ErrorKind::InvalidArgument,
                "k >= 2 bound is singular when x_k equals x_1");
  }
  const double first = a / 12.0 * in.max2_first * std::pow(in.x_k - in.x_1, -a - 1.0) *
                       h * h * h;
  const double bracket =
      1.0 / 12.0 + a / (3.0 * (1.0 - a) * (2.0 - a)) * (0.5 + 1.0 / (3.0 - a));
  const double rest = bracket * in.max3 * std::pow(h, 3.0 - a);
  return (first + rest) / gamma(1.0 - a);
}

}  // namespace

double bound_s1(const BoundInputs& in) {
  validate(in);
  const double a = in.alpha;
  const double caputo = (0.125 + a / ((1.0 - a) * (2.0 - a))) / gamma(1.0 - a) *
                        in.max2 * std::pow(in.h, 2.0 - a);
  const double kernel = in.kernel_bound / 8.0 * in.max2 * in.x_k * in.h * in.h;
  return caputo + kernel;
}

double bound_s2(std::size_t k, const BoundInputs& in) {
  validate(in);
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "bound needs k >= 1");
  if (k == 1) return first_row_bound(in);
  const double h = in.h;
  return quadratic_caputo_bound(in) +
         0.5 * in.kernel_bound * in.max2_first * in.x_1 * h * h +
         in.kernel_bound / 12.0 * in.max3 * (in.x_k - in.x_1) * h * h * h;
}

double bound_s3(std::size_t k, const BoundInputs& in) {
  validate(in);
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "bound needs k >= 1");
  if (k == 1) return first_row_bound(in);
  return quadratic_caputo_bound(in) +
         0.5 * in.kernel_bound * in.max2 * in.x_k * in.h * in.h;
}

double theorem_bound(SchemeKind scheme, std::size_t k, const BoundInputs& in) {
  switch (scheme) {
    case SchemeKind::S1: return bound_s1(in);
    case SchemeKind::S2: return bound_s2(k, in);
    case SchemeKind::S3: return bound_s3(k, in);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown scheme");
}

}  // namespace fide
