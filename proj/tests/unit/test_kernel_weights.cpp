#include <doctest.h>

#include <cmath>
#include <functional>
#include <numeric>

#include "fide/kernel_weights.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace fide;

namespace {

struct NamedKernel {
  const char* name;
  KernelFn fn;
};

const NamedKernel kKernels[] = {
    {"x t", [](double x, double t) { return x * t; }},
    {"x e^t", [](double x, double t) { return x * std::exp(t); }},
    {"x t + x^2 t^2", [](double x, double t) { return x * t + x * x * t * t; }},
    {"cos(x - t)", [](double x, double t) { return std::cos(x - t); }},
    {"1", [](double, double) { return 1.0; }},
};

double kernel_integral(const KernelFn& K, double x, double a, double b,
                       const std::function<double(double)>& phi) {
  return oracle::integrate([&](double t) { return K(x, t) * phi(t); }, a, b);
}

double dot(const std::vector<double>& w, const std::function<double(double)>& phi, double h) {
  double s = 0.0;
  for (std::size_t j = 0; j < w.size(); ++j) s += w[j] * phi(static_cast<double>(j) * h);
  return s;
}

}  // namespace

TEST_SUITE("kernel_weights") {

TEST_CASE("rows reproduce the kernel integral of a constant") {
  const QuadratureRule rule = gauss_legendre(kDefaultQuadOrder);
  const double h = 1.0 / 20.0;
  auto one = [](double) { return 1.0; };
  for (const auto& K : kKernels) {
    CAPTURE(K.name);
    for (std::size_t k = 1; k <= 20; ++k) {
      const double xk = static_cast<double>(k) * h;
      const double ref = kernel_integral(K.fn, xk, 0.0, xk, one);
      const auto lin = linear_kernel_row(k, K.fn, rule, h);
      const auto quad = quadratic_kernel_row(k, K.fn, rule, h);
      CHECK(std::accumulate(lin.weights.begin(), lin.weights.end(), 0.0) ==
            doctest::Approx(ref).epsilon(1e-12));
      CHECK(std::accumulate(quad.weights.begin(), quad.weights.end(), 0.0) ==
            doctest::Approx(ref).epsilon(1e-12));
    }
  }
}

TEST_CASE("linear row is exact for linear phi, quadratic row for quadratic phi past x_1") {
  const QuadratureRule rule = gauss_legendre(kDefaultQuadOrder);
  const double h = 0.1;
  const KernelFn K = [](double x, double t) { return x * t + x * x * t * t; };
  auto line = [](double t) { return 2.0 - 3.0 * t; };
  for (std::size_t k = 1; k <= 10; ++k) {
    const double xk = static_cast<double>(k) * h;
    const double ref = kernel_integral(K, xk, 0.0, xk, line);
    CHECK(dot(linear_kernel_row(k, K, rule, h).weights, line, h) ==
          doctest::Approx(ref).epsilon(1e-12));
    CHECK(dot(quadratic_kernel_row(k, K, rule, h).weights, line, h) ==
          doctest::Approx(ref).epsilon(1e-12));
  }
  for (std::size_t k = 2; k <= 10; ++k) {
    const double xk = static_cast<double>(k) * h;
    auto quad = [](double t) { return 1.0 + t - 4.0 * t * t; };
    const auto row = quadratic_kernel_row(k, K, rule, h);
    const auto lin = linear_kernel_row(k, K, rule, h);
    const double ref = kernel_integral(K, xk, 0.0, xk, quad);
    CHECK(std::abs(dot(row.weights, quad, h) - ref) < std::abs(dot(lin.weights, quad, h) - ref));
  }
}

TEST_CASE("S + T and M + N + O equal the subinterval kernel integral") {
  const QuadratureRule rule = gauss_legendre(kDefaultQuadOrder);
  const double h = 1.0 / 16.0;
  auto one = [](double) { return 1.0; };
  for (const auto& K : kKernels) {
    CAPTURE(K.name);
    for (std::size_t k = 1; k <= 16; ++k) {
      const double xk = static_cast<double>(k) * h;
      for (std::size_t j = 0; j < k; ++j) {
        const double a = static_cast<double>(j) * h;
        const auto st = st_moments(k, j, K.fn, rule, h);
        CHECK(st.s + st.t == doctest::Approx(kernel_integral(K.fn, xk, a, a + h, one))
                                 .epsilon(1e-12));
      }
      for (std::size_t j = 2; j <= k; ++j) {
        const double a = static_cast<double>(j - 1) * h;
        const auto mno = mno_moments(k, j, K.fn, rule, h);
        CHECK(mno.m + mno.n + mno.o ==
              doctest::Approx(kernel_integral(K.fn, xk, a, a + h, one)).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("moments match adaptive quadrature of the local basis functions") {
  const QuadratureRule rule = gauss_legendre(kDefaultQuadOrder);
  const double h = 0.125;
  const KernelFn K = [](double x, double t) { return x * std::exp(t); };
  for (std::size_t k = 2; k <= 8; ++k) {
    const double xk = static_cast<double>(k) * h;
    for (std::size_t j = 2; j <= k; ++j) {
      const double x0 = static_cast<double>(j - 2) * h;
      const double x1 = static_cast<double>(j - 1) * h;
      const double x2 = static_cast<double>(j) * h;
      const auto mno = mno_moments(k, j, K, rule, h);
      auto l0 = [=](double t) { return (t - x1) * (t - x2) / ((x0 - x1) * (x0 - x2)); };
      auto l1 = [=](double t) { return (t - x0) * (t - x2) / ((x1 - x0) * (x1 - x2)); };
      auto l2 = [=](double t) { return (t - x0) * (t - x1) / ((x2 - x0) * (x2 - x1)); };
      CHECK(mno.m == doctest::Approx(kernel_integral(K, xk, x1, x2, l0)).epsilon(1e-12));
      CHECK(mno.n == doctest::Approx(kernel_integral(K, xk, x1, x2, l1)).epsilon(1e-12));
      CHECK(mno.o == doctest::Approx(kernel_integral(K, xk, x1, x2, l2)).epsilon(1e-12));
    }
  }
}

TEST_CASE("case-table quadratic row equals the scatter assembly") {
  const QuadratureRule rule = gauss_legendre(kDefaultQuadOrder);
  for (const auto& K : kKernels) {
    CAPTURE(K.name);
    for (std::size_t n : {5u, 10u, 40u}) {
      const double h = 1.0 / static_cast<double>(n);
      for (std::size_t k = 1; k <= n; ++k) {
        const auto a = quadratic_kernel_row(k, K.fn, rule, h);
        const auto b = quadratic_kernel_row_scatter(k, K.fn, rule, h);
        REQUIRE(a.weights.size() == b.weights.size());
        for (std::size_t j = 0; j <= k; ++j) {
          CHECK(a.weights[j] == doctest::Approx(b.weights[j]).epsilon(1e-13));
        }
      }
    }
  }
}

TEST_CASE("first-interval moments are the j = 0 linear moments") {
  const QuadratureRule rule = gauss_legendre(kDefaultQuadOrder);
  const KernelFn K = kKernels[1].fn;
  for (std::size_t k = 1; k <= 10; ++k) {
    const auto ab = ab_moments(k, K, rule, 0.1);
    const auto st = st_moments(k, 0, K, rule, 0.1);
    CHECK(ab.s == st.s);
    CHECK(ab.t == st.t);
  }
}

TEST_CASE("argument validation") {
  const QuadratureRule rule = gauss_legendre(4);
  const KernelFn K = kKernels[0].fn;
  CHECK_THROWS_KIND(linear_kernel_row(0, K, rule, 0.1), ErrorKind::InvalidArgument);
  CHECK_THROWS_KIND(st_moments(3, 3, K, rule, 0.1), ErrorKind::InvalidArgument);
  CHECK_THROWS_KIND(mno_moments(3, 1, K, rule, 0.1), ErrorKind::InvalidArgument);
  CHECK_THROWS_KIND(mno_moments(3, 4, K, rule, 0.1), ErrorKind::InvalidArgument);
  const KernelFn nan_kernel = [](double, double) { return std::nan(""); };
  CHECK_THROWS_KIND(linear_kernel_row(2, nan_kernel, rule, 0.1), ErrorKind::NonFiniteValue);
}

}
