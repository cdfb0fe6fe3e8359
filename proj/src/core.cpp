#include "fide/core.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <numbers>
#include <utility>

namespace fide {

Mesh::Mesh(std::size_t n) : n_(n), h_(0.0) {
  if (n == 0) {
    throw Error(ErrorKind::InvalidArgument, "mesh needs at least one subinterval");
  }
  h_ = 1.0 / static_cast<double>(n);
  nodes_.resize(n + 1);
  // Each node independently as k/n: no drift, and x_n == 1 exactly.
  for (std::size_t k = 0; k <= n; ++k) {
    nodes_[k] = static_cast<double>(k) / static_cast<double>(n);
  }
}

double Mesh::node(std::size_t k) const {
  if (k > n_) {
    throw Error(ErrorKind::OutOfRange, "node index " + std::to_string(k) +
                                           " exceeds n = " + std::to_string(n_));
  }
  return nodes_[k];
}

ProblemSpec::ProblemSpec(std::string name, double alpha, double delta,
                         ScalarFn f, KernelFn kernel,
                         std::optional<ScalarFn> exact)
    : name_(std::move(name)),
      alpha_(alpha),
      delta_(delta),
      f_(std::move(f)),
      kernel_(std::move(kernel)),
      exact_(std::move(exact)) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw Error(ErrorKind::OutOfRange,
                "alpha must lie in (0, 1), got " + std::to_string(alpha));
  }
  if (!std::isfinite(delta)) {
    throw Error(ErrorKind::NonFiniteValue, "initial value delta is not finite");
  }
  if (!f_ || !kernel_) {
    throw Error(ErrorKind::InvalidArgument, "forcing and kernel must be callable");
  }
  if (exact_ && !*exact_) exact_.reset();
}

std::string_view to_string(SchemeKind scheme) noexcept {
  switch (scheme) {
    case SchemeKind::S1: return "S1";
    case SchemeKind::S2: return "S2";
    case SchemeKind::S3: return "S3";
  }
  return "?";
}

SchemeKind parse_scheme(std::string_view text) {
  if (text.size() == 2 && (text[0] == 's' || text[0] == 'S')) {
    switch (text[1]) {
      case '1': return SchemeKind::S1;
      case '2': return SchemeKind::S2;
      case '3': return SchemeKind::S3;
      default: break;
    }
  }
  throw Error(ErrorKind::InvalidArgument,
              "unknown scheme '" + std::string(text) + "' (valid: s1, s2, s3)");
}

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoeffs = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

double lanczos_gamma(double x) {
  const double z = x - 1.0;
  double sum = kLanczosCoeffs[0];
  for (std::size_t i = 1; i < kLanczosCoeffs.size(); ++i) {
    sum += kLanczosCoeffs[i] / (z + static_cast<double>(i));
  }
  const double t = z + kLanczosG + 0.5;
  // t^(z+1/2) split in two so x near 171 does not overflow before exp(-t).
  const double half_pow = std::pow(t, 0.5 * (z + 0.5));
  return std::sqrt(2.0 * std::numbers::pi) * half_pow * (half_pow * std::exp(-t)) * sum;
}

}  // namespace

double gamma(double x) {
  if (!(x > 0.0 && x < 171.0)) {
    throw Error(ErrorKind::Domain,
                "gamma argument must lie in (0, 171), got " + std::to_string(x));
  }
  if (x < 0.5) {
    return std::numbers::pi /
           (std::sin(std::numbers::pi * x) * lanczos_gamma(1.0 - x));
  }
  return lanczos_gamma(x);
}

QuadratureRule gauss_legendre(int order) {
  if (order < 2 || order > 64) {
    throw Error(ErrorKind::UnsupportedOrder,
                "Gauss-Legendre order must be in [2, 64], got " + std::to_string(order));
  }
  const auto n = static_cast<std::size_t>(order);
  QuadratureRule rule;
  rule.order = order;
  rule.abscissae.resize(n);
  rule.weights.resize(n);

  // Newton on P_n from the Chebyshev-like initial guess; roots are symmetric.
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = z;
      for (std::size_t m = 2; m <= n; ++m) {
        const double md = static_cast<double>(m);
        const double p2 = ((2.0 * md - 1.0) * z * p1 - (md - 1.0) * p0) / md;
        p0 = p1;
        p1 = p2;
      }
      dp = static_cast<double>(n) * (z * p1 - p0) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    // Recompute the derivative at the converged root for the weight.
    {
      double p0 = 1.0;
      double p1 = z;
      for (std::size_t m = 2; m <= n; ++m) {
        const double md = static_cast<double>(m);
        const double p2 = ((2.0 * md - 1.0) * z * p1 - (md - 1.0) * p0) / md;
        p0 = p1;
        p1 = p2;
      }
      dp = static_cast<double>(n) * (z * p1 - p0) / (z * z - 1.0);
    }
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    // Map (-1, 1) -> (0, 1); ascending abscissae.
    rule.abscissae[i] = 0.5 * (1.0 - z);
    rule.abscissae[n - 1 - i] = 0.5 * (1.0 + z);
    rule.weights[i] = 0.5 * w;
    rule.weights[n - 1 - i] = 0.5 * w;
  }
  return rule;
}

double integrate_01(const std::function<double(double)>& g,
                    const QuadratureRule& rule) {
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.abscissae.size(); ++i) {
    const double value = g(rule.abscissae[i]);
    if (!std::isfinite(value)) {
      throw Error(ErrorKind::NonFiniteValue,
                  "integrand not finite at p = " + std::to_string(rule.abscissae[i]));
    }
    sum += rule.weights[i] * value;
  }
  return sum;
}

}  // namespace fide
