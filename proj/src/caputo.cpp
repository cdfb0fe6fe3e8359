#include "fide/caputo.hpp"

#include <cmath>
#include <string>

#include "fide/core.hpp"
#include "fide/error.hpp"

namespace fide {

namespace {

// m^e with 0^e = 0 for e > 0.
double ipow(std::size_t m, double e) {
  return m == 0 ? 0.0 : std::pow(static_cast<double>(m), e);
}

void check_args(std::size_t k, double alpha, double h) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "Caputo row needs k >= 1");
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw Error(ErrorKind::OutOfRange, "alpha must lie in (0, 1)");
  }
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw Error(ErrorKind::InvalidArgument, "step size must be positive");
  }
}

}  // namespace

double caputo_scale(double alpha, double h) {
  return std::pow(h, -alpha) / gamma(2.0 - alpha);
}

CaputoRow linear_caputo_row(std::size_t k, double alpha, double h) {
  check_args(k, alpha, h);
  const double e = 1.0 - alpha;
  const double scale = caputo_scale(alpha, h);

  CaputoRow row{k, alpha, h, std::vector<double>(k + 1)};
  row.weights[0] = ipow(k - 1, e) - ipow(k, e);
  for (std::size_t j = 1; j < k; ++j) {
    row.weights[j] = ipow(k - j - 1, e) - 2.0 * ipow(k - j, e) + ipow(k - j + 1, e);
  }
  row.weights[k] = 1.0;
  for (auto& w : row.weights) w *= scale;
  return row;
}

double quad_coeff_a(std::size_t m, double alpha) {
  const double e = 1.0 - alpha;
  return ipow(m + 1, e) - ipow(m, e);
}

QuadCoeffsBCD quad_coeffs_bcd(std::size_t m, double alpha) {
  const double md = static_cast<double>(m);
  const double e = 1.0 - alpha;
  const double lo = ipow(m, e);      // m^(1-alpha)
  const double hi = ipow(m + 1, e);  // (m+1)^(1-alpha)
  const double inv = 1.0 / (2.0 - alpha);

  QuadCoeffsBCD out;
  out.b = inv * (hi * (md + 0.5 * alpha) - lo * (md - 0.5 * alpha + 1.0));
  out.c = 2.0 * inv * (lo * (md - alpha + 2.0) - hi * (md + 1.0));
  out.d = inv * (hi * (md - 0.5 * alpha + 2.0) - lo * (md - 1.5 * alpha + 3.0));
  return out;
}

CaputoRow quadratic_caputo_row(std::size_t k, double alpha, double h) {
  check_args(k, alpha, h);

  // s[j] multiplies phi_{k-j}; flipped into node order at the end.
  std::vector<double> s(k + 1, 0.0);
  const auto bcd = [alpha](std::size_t m) { return quad_coeffs_bcd(m, alpha); };

  if (k == 1) {
    const double a0 = quad_coeff_a(0, alpha);
    s[0] = a0;
    s[1] = -a0;
  } else if (k == 2) {
    const auto q0 = bcd(0);
    const double a1 = quad_coeff_a(1, alpha);
    s[0] = q0.d;
    s[1] = q0.c + a1;
    s[2] = q0.b - a1;
  } else if (k == 3) {
    const auto q0 = bcd(0);
    const auto q1 = bcd(1);
    const double a2 = quad_coeff_a(2, alpha);
    s[0] = q0.d;
    s[1] = q0.c + q1.d;
    s[2] = q0.b + q1.c + a2;
    s[3] = q1.b - a2;
  } else {
    const double ak1 = quad_coeff_a(k - 1, alpha);
    s[0] = bcd(0).d;
    s[1] = bcd(0).c + bcd(1).d;
    for (std::size_t j = 2; j + 2 <= k; ++j) {
      s[j] = bcd(j - 2).b + bcd(j - 1).c + bcd(j).d;
    }
    s[k - 1] = bcd(k - 3).b + bcd(k - 2).c + ak1;
    s[k] = bcd(k - 2).b - ak1;
  }

  const double scale = caputo_scale(alpha, h);
  CaputoRow row{k, alpha, h, std::vector<double>(k + 1)};
  for (std::size_t j = 0; j <= k; ++j) row.weights[k - j] = scale * s[j];
  return row;
}

double apply_caputo(const CaputoRow& row, std::span<const double> values) {
  if (values.size() != row.weights.size()) {
    throw Error(ErrorKind::LengthMismatch,
                "expected " + std::to_string(row.weights.size()) + " values, got " +
                    std::to_string(values.size()));
  }
  double sum = 0.0;
  for (std::size_t j = 0; j < values.size(); ++j) sum += row.weights[j] * values[j];
  return sum;
}

}  // namespace fide
