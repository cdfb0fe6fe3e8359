#include <doctest.h>

#include <cmath>
#include <vector>

#include "fide/analysis.hpp"
#include "fide/problems.hpp"
#include "test_util.hpp"

using namespace fide;

namespace {

BoundInputs sample_inputs() {
  BoundInputs in;
  in.alpha = 0.5;
  in.h = 0.2;
  in.x_k = 1.0;
  in.x_1 = 0.2;
  in.max2_first = 2.0;
  in.max2 = 2.0;
  in.max3 = 1.5;
  in.kernel_bound = 1.0;
  return in;
}

}  // namespace

TEST_SUITE("analysis") {

TEST_CASE("MAE and convergence order") {
  const BuiltinProblem bp = example_5_1();
  const SolveResult r = solve(bp.spec, SchemeKind::S1, 5);
  double worst = 0.0;
  for (std::size_t k = 0; k <= 5; ++k) {
    worst = std::max(worst, std::abs((*bp.spec.exact())(r.mesh.node(k)) - r.values[k]));
  }
  CHECK(mae(r) == worst);
  CHECK(convergence_order(4.0, 1.0) == doctest::Approx(2.0));
  CHECK_THROWS_KIND(convergence_order(0.0, 1.0), ErrorKind::InvalidArgument);
  const ProblemSpec no_exact("p", 0.5, 0.0, [](double) { return 1.0; },
                             [](double, double) { return 0.0; });
  CHECK_THROWS_KIND(mae(solve(no_exact, SchemeKind::S1, 4)), ErrorKind::MissingExact);
}

TEST_CASE("ladders must double") {
  const std::vector<std::size_t> good = {5, 10, 20};
  const std::vector<std::size_t> gap = {5, 10, 30};
  const std::vector<std::size_t> zero = {0, 0};
  const std::vector<std::size_t> empty;
  CHECK_NOTHROW(validate_ladder(good));
  CHECK_THROWS_KIND(validate_ladder(gap), ErrorKind::InvalidArgument);
  CHECK_THROWS_KIND(validate_ladder(zero), ErrorKind::InvalidArgument);
  CHECK_THROWS_KIND(validate_ladder(empty), ErrorKind::InvalidArgument);
}

TEST_CASE("convergence study rows match individual solves in ladder order") {
  const BuiltinProblem bp = example_5_2();
  const std::vector<std::size_t> ladder = {5, 10, 20, 40};
  const QuadratureRule rule = gauss_legendre(kDefaultQuadOrder);
  const ConvergenceReport rep = convergence_study(bp.spec, SchemeKind::S3, ladder, rule);
  REQUIRE(rep.rows.size() == ladder.size());
  CHECK_FALSE(rep.rows[0].co.has_value());
  for (std::size_t i = 0; i < ladder.size(); ++i) {
    CHECK(rep.rows[i].n == ladder[i]);
    CHECK(rep.rows[i].mae == mae(solve(bp.spec, SchemeKind::S3, ladder[i], rule)));
    if (i > 0) {
      REQUIRE(rep.rows[i].co.has_value());
      CHECK(*rep.rows[i].co == std::log2(rep.rows[i - 1].mae / rep.rows[i].mae));
    }
  }
}

TEST_CASE("orders below the noise floor are omitted") {
  const double alpha = 0.5;
  const ProblemSpec p("zero", alpha, 0.0, [](double) { return 0.0; },
                      [](double, double) { return 1.0; }, [](double) { return 0.0; });
  const std::vector<std::size_t> ladder = {4, 8};
  const auto rep = convergence_study(p, SchemeKind::S1, ladder, gauss_legendre(4));
  CHECK(rep.rows[1].mae < kMaeNoiseFloor);
  CHECK_FALSE(rep.rows[1].co.has_value());
}

TEST_CASE("linear-scheme bound matches a hand evaluation") {
  const BoundInputs in = sample_inputs();
  const double expected =
      (0.125 + 0.5 / (0.5 * 1.5)) / std::tgamma(0.5) * 2.0 * std::pow(0.2, 1.5) +
      1.0 / 8.0 * 2.0 * 1.0 * 0.04;
  CHECK(bound_s1(in) == doctest::Approx(expected).epsilon(1e-14));
  CHECK(bound_s1(in) == doctest::Approx(0.0899).epsilon(1e-3));
}

TEST_CASE("quadratic bounds at k = 1 and k >= 2") {
  BoundInputs in = sample_inputs();
  const double first = 0.5 / (2.0 * std::tgamma(2.5)) * 2.0 * std::pow(0.2, 1.5) +
                       0.5 * 2.0 * 0.2 * 0.04;
  CHECK(bound_s2(1, in) == doctest::Approx(first).epsilon(1e-14));
  CHECK(bound_s3(1, in) == doctest::Approx(first).epsilon(1e-14));

  const double caputo =
      (0.5 / 12.0 * 2.0 * std::pow(0.8, -1.5) * 0.008 +
       (1.0 / 12.0 + 0.5 / (3.0 * 0.5 * 1.5) * (0.5 + 1.0 / 2.5)) * 1.5 * std::pow(0.2, 2.5)) /
      std::tgamma(0.5);
  CHECK(bound_s2(5, in) == doctest::Approx(caputo + 0.5 * 2.0 * 0.2 * 0.04 +
                                           1.0 / 12.0 * 1.5 * 0.8 * 0.008)
                               .epsilon(1e-14));
  CHECK(bound_s3(5, in) == doctest::Approx(caputo + 0.5 * 2.0 * 1.0 * 0.04).epsilon(1e-14));
  CHECK(theorem_bound(SchemeKind::S1, 5, in) == bound_s1(in));
}

TEST_CASE("bound inputs are validated") {
  BoundInputs in = sample_inputs();
  in.max3 = INFINITY;
  CHECK_THROWS_KIND(bound_s2(3, in), ErrorKind::Unbounded);
  in = sample_inputs();
  in.x_k = in.x_1;
  CHECK_THROWS_KIND(bound_s3(2, in), ErrorKind::InvalidArgument);
  in = sample_inputs();
  in.max2 = -1.0;
  CHECK_THROWS_KIND(bound_s1(in), ErrorKind::InvalidArgument);
  in = sample_inputs();
  in.alpha = 1.0;
  CHECK_THROWS_KIND(bound_s1(in), ErrorKind::OutOfRange);
  CHECK_THROWS_KIND(bound_s2(0, sample_inputs()), ErrorKind::InvalidArgument);
}

TEST_CASE("bounds for the non-smooth example are refused") {
  const BuiltinProblem bp = example_5_3();
  CHECK_THROWS_KIND(bound_inputs(bp, Mesh(5), 5), ErrorKind::Unbounded);
  CHECK_THROWS_KIND(bp.max2(), ErrorKind::Unbounded);
}

}
