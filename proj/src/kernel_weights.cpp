#include "fide/kernel_weights.hpp"

#include <cmath>
#include <string>

#include "fide/error.hpp"

namespace fide {

namespace {

double eval_kernel(const KernelFn& kernel, double x, double t) {
  const double v = kernel(x, t);
  if (!std::isfinite(v)) {
    throw Error(ErrorKind::NonFiniteValue, "kernel not finite at (x, t) = (" +
                                               std::to_string(x) + ", " +
                                               std::to_string(t) + ")");
  }
  return v;
}

void require_k(std::size_t k) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "kernel row needs k >= 1");
}

}  // namespace

LinearMoments st_moments(std::size_t k, std::size_t j, const KernelFn& kernel,
                         const QuadratureRule& rule, double h) {
  if (j + 1 > k) {
    throw Error(ErrorKind::InvalidArgument, "st_moments needs 0 <= j <= k-1");
  }
  const double x = static_cast<double>(k) * h;
  const double jd = static_cast<double>(j);
  LinearMoments out;
  for (std::size_t i = 0; i < rule.abscissae.size(); ++i) {
    const double p = rule.abscissae[i];
    const double kv = eval_kernel(kernel, x, h * (p + jd));
    out.s += rule.weights[i] * (1.0 - p) * kv;
    out.t += rule.weights[i] * p * kv;
  }
  out.s *= h;
  out.t *= h;
  return out;
}

KernelRow linear_kernel_row(std::size_t k, const KernelFn& kernel,
                            const QuadratureRule& rule, double h) {
  require_k(k);
  KernelRow row{k, h, std::vector<double>(k + 1, 0.0)};
  // Interval [x_j, x_{j+1}] feeds S to node j and T to node j+1.
  for (std::size_t j = 0; j < k; ++j) {
    const auto st = st_moments(k, j, kernel, rule, h);
    row.weights[j] += st.s;
    row.weights[j + 1] += st.t;
  }
  return row;
}

LinearMoments ab_moments(std::size_t k, const KernelFn& kernel,
                         const QuadratureRule& rule, double h) {
  require_k(k);
  return st_moments(k, 0, kernel, rule, h);
}

QuadraticMoments mno_moments(std::size_t k, std::size_t j, const KernelFn& kernel,
                             const QuadratureRule& rule, double h) {
  if (j < 2 || j > k) {
    throw Error(ErrorKind::InvalidArgument, "mno_moments needs 2 <= j <= k");
  }
  const double x = static_cast<double>(k) * h;
  const double left = static_cast<double>(j - 1) * h;
  QuadraticMoments out;
  for (std::size_t i = 0; i < rule.abscissae.size(); ++i) {
    const double p = rule.abscissae[i];
    const double wk = rule.weights[i] * eval_kernel(kernel, x, h * p + left);
    out.m += wk * p * (p - 1.0);
    out.n += wk * (1.0 - p * p);
    out.o += wk * p * (p + 1.0);
  }
  out.m *= 0.5 * h;
  out.n *= h;
  out.o *= 0.5 * h;
  return out;
}

KernelRow quadratic_kernel_row(std::size_t k, const KernelFn& kernel,
                               const QuadratureRule& rule, double h) {
  require_k(k);
  KernelRow row{k, h, std::vector<double>(k + 1, 0.0)};
  auto& v = row.weights;
  const auto ab = ab_moments(k, kernel, rule, h);
  const auto mno = [&](std::size_t j) { return mno_moments(k, j, kernel, rule, h); };

  if (k == 1) {
    v[0] = ab.s;
    v[1] = ab.t;
  } else if (k == 2) {
    const auto q2 = mno(2);
    v[0] = q2.m + ab.s;
    v[1] = q2.n + ab.t;
    v[2] = q2.o;
  } else if (k == 3) {
    const auto q2 = mno(2);
    const auto q3 = mno(3);
    v[0] = q2.m + ab.s;
    v[1] = q3.m + q2.n + ab.t;
    v[2] = q3.n + q2.o;
    v[3] = q3.o;
  } else {
    // Interval j contributes (M, N, O) to nodes (j-2, j-1, j); cache each once.
    std::vector<QuadraticMoments> q(k + 1);
    for (std::size_t j = 2; j <= k; ++j) q[j] = mno(j);
    v[0] = q[2].m + ab.s;
    v[1] = q[3].m + q[2].n + ab.t;
    for (std::size_t j = 2; j + 2 <= k; ++j) {
      v[j] = q[j + 2].m + q[j + 1].n + q[j].o;
    }
    v[k - 1] = q[k].n + q[k - 1].o;
    v[k] = q[k].o;
  }
  return row;
}

KernelRow quadratic_kernel_row_scatter(std::size_t k, const KernelFn& kernel,
                                       const QuadratureRule& rule, double h) {
  require_k(k);
  KernelRow row{k, h, std::vector<double>(k + 1, 0.0)};
  const auto ab = ab_moments(k, kernel, rule, h);
  row.weights[0] += ab.s;
  row.weights[1] += ab.t;
  for (std::size_t j = 2; j <= k; ++j) {
    const auto q = mno_moments(k, j, kernel, rule, h);
    row.weights[j - 2] += q.m;
    row.weights[j - 1] += q.n;
    row.weights[j] += q.o;
  }
  return row;
}

}  // namespace fide
