#include <doctest.h>

#include <cmath>
#include <string>

#include "fide/expr.hpp"
#include "fide/problems.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace fide;

namespace {

// Caputo derivative of each built-in exact solution, from monomial formulas.
double caputo_of_exact(const std::string& key, double alpha, double x) {
  if (key == "ex5.1") return oracle::caputo_power(2, alpha, x) - oracle::caputo_power(1, alpha, x);
  if (key == "ex5.2") return oracle::caputo_power(1, alpha, x) - oracle::caputo_power(3, alpha, x);
  return oracle::caputo_power(1.5, alpha, x);
}

std::string replace_line(std::string text, const std::string& key, const std::string& line) {
  const auto pos = text.find("\n" + key + " = ");
  REQUIRE(pos != std::string::npos);
  const auto end = text.find('\n', pos + 1);
  return text.substr(0, pos + 1) + line + text.substr(end);
}

void check_load_error(const std::string& text, ErrorKind kind, const std::string& needle) {
  CAPTURE(text);
  try {
    (void)load_problem(text);
    FAIL("expected a load error");
  } catch (const Error& e) {
    CHECK(e.kind() == kind);
    CHECK_MESSAGE(std::string(e.what()).find(needle) != std::string::npos, e.what());
  }
}

}  // namespace

TEST_SUITE("problems") {

TEST_CASE("built-in problems satisfy their own equations") {
  for (const auto& bp : builtin_problems()) {
    CAPTURE(bp.key);
    const auto& spec = bp.spec;
    const auto& phi = *spec.exact();
    for (double x : oracle::chebyshev_points(25)) {
      const double integral =
          oracle::integrate([&](double t) { return spec.kernel()(x, t) * phi(t); }, 0.0, x);
      const double lhs = caputo_of_exact(bp.key, spec.alpha(), x);
      CHECK(lhs - integral == doctest::Approx(spec.forcing()(x)).epsilon(1e-12).scale(1.0));
    }
  }
}

TEST_CASE("closures and expression spellings agree") {
  for (const auto& bp : builtin_problems()) {
    CAPTURE(bp.key);
    const expr::Expr f = expr::parse(bp.text.f);
    const expr::Expr k = expr::parse(bp.text.kernel);
    const expr::Expr ex = expr::parse(*bp.text.exact);
    for (int i = 1; i <= 1000; ++i) {
      const double x = i / 1000.0;
      const double t = std::fmod(0.618034 * i, 1.0);
      CHECK(f(x) == doctest::Approx(bp.spec.forcing()(x)).epsilon(1e-12).scale(1.0));
      CHECK(k(x, t) == doctest::Approx(bp.spec.kernel()(x, t)).epsilon(1e-12).scale(1.0));
      CHECK(ex(x) == doctest::Approx((*bp.spec.exact())(x)).epsilon(1e-12).scale(1.0));
    }
  }
}

TEST_CASE("kernel bounds hold on the unit square") {
  for (const auto& bp : builtin_problems()) {
    double worst = 0.0;
    for (int i = 0; i <= 100; ++i) {
      for (int j = 0; j <= 100; ++j) {
        worst = std::max(worst, std::abs(bp.spec.kernel()(i / 100.0, j / 100.0)));
      }
    }
    CHECK(worst <= bp.kernel_bound * (1 + 1e-15));
    CHECK(worst == doctest::Approx(bp.kernel_bound).epsilon(1e-12));
  }
}

TEST_CASE("derivative maxima dominate sampled difference quotients") {
  for (const auto& bp : builtin_problems()) {
    if (!bp.bounded()) continue;
    CAPTURE(bp.key);
    const auto& phi = *bp.spec.exact();
    const double d = 1e-3;
    for (double b : {0.2, 0.5, 1.0}) {
      double m2 = 0.0;
      double m3 = 0.0;
      for (int i = 0; i <= 200; ++i) {
        const double x = std::clamp(b * i / 200.0, 2 * d, b - 2 * d);
        m2 = std::max(m2, std::abs((phi(x + d) - 2 * phi(x) + phi(x - d)) / (d * d)));
        m3 = std::max(m3, std::abs((phi(x + 2 * d) - 2 * phi(x + d) + 2 * phi(x - d) -
                                    phi(x - 2 * d)) / (2 * d * d * d)));
      }
      CHECK(m2 <= bp.derivatives->second(b) + 1e-4);
      CHECK(m2 >= bp.derivatives->second(b) * 0.95);
      CHECK(m3 <= bp.derivatives->third(b) + 1e-2);
    }
  }
}

TEST_CASE("lookup by key") {
  CHECK(find_builtin("ex5.2")->spec.alpha() == doctest::Approx(5.0 / 6.0));
  CHECK_FALSE(find_builtin("ex9").has_value());
  const BuiltinProblem p = example_5_1();
  const auto in = bound_inputs(p, Mesh(10), 3);
  CHECK(in.x_k == doctest::Approx(0.3));
  CHECK(in.max2 == 2.0);
  CHECK(in.kernel_bound == 1.0);
}

TEST_CASE("serialized configs load back to the same problem") {
  for (const auto& bp : builtin_problems()) {
    CAPTURE(bp.key);
    const ProblemSpec spec = load_problem(serialize_problem(bp));
    CHECK(spec.name() == bp.spec.name());
    CHECK(spec.alpha() == bp.spec.alpha());
    CHECK(spec.delta() == bp.spec.delta());
    REQUIRE(spec.has_exact());
    for (double x : oracle::chebyshev_points(50)) {
      CHECK(spec.forcing()(x) == doctest::Approx(bp.spec.forcing()(x)).epsilon(1e-12).scale(1.0));
      CHECK(spec.kernel()(x, 1 - x) ==
            doctest::Approx(bp.spec.kernel()(x, 1 - x)).epsilon(1e-12).scale(1.0));
      CHECK((*spec.exact())(x) == doctest::Approx((*bp.spec.exact())(x)).epsilon(1e-12));
    }
    const SolveResult a = solve(bp.spec, SchemeKind::S2, 10);
    const SolveResult b = solve(spec, SchemeKind::S2, 10);
    for (std::size_t k = 0; k <= 10; ++k) {
      CHECK(a.values[k] == doctest::Approx(b.values[k]).epsilon(1e-11).scale(1.0));
    }
  }
}

TEST_CASE("the shipped sample config loads") {
  const ProblemSpec spec = load_problem_file(std::string(FIDE_SOURCE_DIR) + "/problems/example_5_1.cfg");
  CHECK(spec.alpha() == 0.5);
  CHECK(spec.has_exact());
  CHECK_THROWS_KIND(load_problem_file("/nonexistent/problem.cfg"), ErrorKind::Io);
}

TEST_CASE("loader diagnostics") {
  const std::string base = serialize_problem(example_5_1());
  check_load_error(replace_line(base, "alpha", "alpha = 1.5"), ErrorKind::OutOfRange, "alpha");
  check_load_error(replace_line(base, "alpha", "alpha = x"), ErrorKind::InvalidArgument, "alpha");
  check_load_error(replace_line(base, "f", "f = x +"), ErrorKind::SyntaxError, "field 'f'");
  check_load_error(replace_line(base, "f", "f = x*t"), ErrorKind::UnknownIdentifier, "field 'f'");
  check_load_error(replace_line(base, "kernel", "kernel = x*y"), ErrorKind::UnknownIdentifier,
                   "field 'kernel'");
  check_load_error(replace_line(base, "kernel", "kernel ="), ErrorKind::MissingField, "kernel");
  check_load_error(base + "speed = 3\n", ErrorKind::InvalidArgument, "unknown key");
  check_load_error(base + "alpha = 0.5\n", ErrorKind::InvalidArgument, "duplicate key");
  check_load_error(base + "just words\n", ErrorKind::SyntaxError, "key = value");
  check_load_error("name = p\nalpha = 0.5\ndelta = 0\nf = 1\n", ErrorKind::MissingField, "kernel");
  const ProblemSpec no_exact = load_problem("name = p\nalpha = 1/3 # third\ndelta = 0\n"
                                            "f = 1\nkernel = 0\n");
  CHECK_FALSE(no_exact.has_exact());
  CHECK(no_exact.alpha() == doctest::Approx(1.0 / 3.0));
}

}
