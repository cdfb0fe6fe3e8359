#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fide/error.hpp"

namespace fide {

/// f(x), exact solutions.
using ScalarFn = std::function<double(double)>;
/// K(x, t).
using KernelFn = std::function<double(double, double)>;

/// Uniform grid on [0, 1] with n subintervals.
class Mesh {
 public:
  explicit Mesh(std::size_t n);

  std::size_t n() const noexcept { return n_; }
  double h() const noexcept { return h_; }
  double node(std::size_t k) const;
  std::span<const double> nodes() const noexcept { return nodes_; }

 private:
  std::size_t n_;
  double h_;
  std::vector<double> nodes_;
};

/// D^alpha phi(x) = f(x) + int_0^x K(x,t) phi(t) dt, phi(0) = delta, on [0, 1].
class ProblemSpec {
 public:
  ProblemSpec(std::string name, double alpha, double delta, ScalarFn f,
              KernelFn kernel, std::optional<ScalarFn> exact = std::nullopt);

  const std::string& name() const noexcept { return name_; }
  double alpha() const noexcept { return alpha_; }
  double delta() const noexcept { return delta_; }
  const ScalarFn& forcing() const noexcept { return f_; }
  const KernelFn& kernel() const noexcept { return kernel_; }
  const std::optional<ScalarFn>& exact() const noexcept { return exact_; }
  bool has_exact() const noexcept { return exact_.has_value(); }

 private:
  std::string name_;
  double alpha_;
  double delta_;
  ScalarFn f_;
  KernelFn kernel_;
  std::optional<ScalarFn> exact_;
};

/// S1 = linear, S2 = quadratic, S3 = quadratic Caputo with linear kernel.
enum class SchemeKind { S1, S2, S3 };

std::string_view to_string(SchemeKind scheme) noexcept;
/// Accepts "s1"/"S1" etc.
SchemeKind parse_scheme(std::string_view text);

/// Gauss-Legendre rule normalized to [0, 1].
struct QuadratureRule {
  int order = 0;
  std::vector<double> abscissae;
  std::vector<double> weights;
};

inline constexpr int kDefaultQuadOrder = 10;

/// Gamma function on (0, 171) via Lanczos (g = 7, 9 terms) with reflection below 1/2.
double gamma(double x);

/// Orders 2..64.
QuadratureRule gauss_legendre(int order);

/// Sum of w_i g(p_i); throws NonFiniteValue if g is not finite at an abscissa.
double integrate_01(const std::function<double(double)>& g,
                    const QuadratureRule& rule);

}  // namespace fide
