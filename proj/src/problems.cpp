#include "fide/problems.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

#include "fide/error.hpp"
#include "fide/expr.hpp"

namespace fide {

double BuiltinProblem::max2() const {
  if (!derivatives) throw Error(ErrorKind::Unbounded, key + ": phi'' is unbounded on [0, 1]");
  return derivatives->second(1.0);
}

double BuiltinProblem::max3() const {
  if (!derivatives) throw Error(ErrorKind::Unbounded, key + ": phi''' is unbounded on [0, 1]");
  return derivatives->third(1.0);
}

BuiltinProblem example_5_1() {
  const double sqrt_pi = std::sqrt(std::numbers::pi);
  auto f = [sqrt_pi](double x) {
    const double x4 = x * x * x * x;
    return ((8.0 / 3.0) * x * std::sqrt(x) - 2.0 * std::sqrt(x)) / sqrt_pi -
           (3.0 * x4 * x - 4.0 * x4) / 12.0;
  };
  auto kernel = [](double x, double t) { return x * t; };
  auto exact = [](double x) { return x * x - x; };
  return BuiltinProblem{
      ProblemSpec("example 5.1", 0.5, 0.0, f, kernel, exact),
      "ex5.1",
      1.0,
      DerivativeMaxima{[](double) { return 2.0; }, [](double) { return 0.0; }},
      ProblemText{"((8/3)*x^(3/2) - 2*x^(1/2))/sqrt(pi) - (3*x^5 - 4*x^4)/12", "x*t",
                  "x^2 - x"},
  };
}

BuiltinProblem example_5_2() {
  const double g56 = gamma(5.0 / 6.0);
  auto f = [g56](double x) {
    const double x2 = x * x;
    return -(3.0 / 91.0) * g56 * std::pow(x, 1.0 / 6.0) * (-91.0 + 216.0 * x2) /
               std::numbers::pi +
           5.0 * x - x * std::exp(x) * (5.0 - 5.0 * x + 3.0 * x2 - x2 * x);
  };
  auto kernel = [](double x, double t) { return x * std::exp(t); };
  auto exact = [](double x) { return x - x * x * x; };
  return BuiltinProblem{
      ProblemSpec("example 5.2", 5.0 / 6.0, 0.0, f, kernel, exact),
      "ex5.2",
      std::numbers::e,
      DerivativeMaxima{[](double b) { return 6.0 * b; }, [](double) { return 6.0; }},
      ProblemText{"-(3/91)*gamma(5/6)*x^(1/6)*(-91 + 216*x^2)/pi + 5*x - "
                  "x*exp(x)*(5 - 5*x + 3*x^2 - x^3)",
                  "x*exp(t)", "x - x^3"},
  };
}

BuiltinProblem example_5_3() {
  const double lead = 3.0 * std::sqrt(std::numbers::pi) / (4.0 * gamma(13.0 / 6.0));
  auto f = [lead](double x) {
    return lead * std::pow(x, 7.0 / 6.0) -
           (2.0 / 63.0) * std::pow(x, 4.5) * (9.0 + 7.0 * x * x);
  };
  auto kernel = [](double x, double t) { return x * t + x * x * t * t; };
  auto exact = [](double x) { return x * std::sqrt(x); };
  return BuiltinProblem{
      ProblemSpec("example 5.3", 1.0 / 3.0, 0.0, f, kernel, exact),
      "ex5.3",
      2.0,
      std::nullopt,
      ProblemText{"3*sqrt(pi)*x^(7/6)/(4*gamma(13/6)) - (2/63)*x^(9/2)*(9 + 7*x^2)",
                  "x*t + x^2*t^2", "x^(3/2)"},
  };
}

std::vector<BuiltinProblem> builtin_problems() {
  return {example_5_1(), example_5_2(), example_5_3()};
}

std::optional<BuiltinProblem> find_builtin(std::string_view key) {
  for (auto& p : builtin_problems()) {
    if (p.key == key) return p;
  }
  return std::nullopt;
}

BoundInputs bound_inputs(const BuiltinProblem& problem, const Mesh& mesh, std::size_t k) {
  if (!problem.derivatives) {
    throw Error(ErrorKind::Unbounded,
                problem.key + ": exact solution is not in C^2[0, 1] (phi'' unbounded at 0); "
                              "the error bounds do not apply");
  }
  if (k < 1 || k > mesh.n()) {
    throw Error(ErrorKind::OutOfRange, "bound row must satisfy 1 <= k <= n");
  }
  const double x1 = mesh.node(1);
  const double xk = mesh.node(k);
  BoundInputs in;
  in.alpha = problem.spec.alpha();
  in.h = mesh.h();
  in.x_k = xk;
  in.x_1 = x1;
  in.max2_first = problem.derivatives->second(x1);
  in.max2 = problem.derivatives->second(xk);
  in.max3 = problem.derivatives->third(xk);
  in.kernel_bound = problem.kernel_bound;
  return in;
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

expr::Expr parse_field(const std::string& field, const std::string& source) {
  try {
    return expr::parse(source);
  } catch (const expr::ExprError& e) {
    throw expr::ExprError(e.kind(), e.offset(), "field '" + field + "': " + e.what());
  }
}

double constant_field(const std::string& field, const std::string& source) {
  const expr::Expr e = parse_field(field, source);
  if (e.uses_variable('x') || e.uses_variable('t')) {
    throw Error(ErrorKind::InvalidArgument,
                "field '" + field + "' must be a constant expression");
  }
  try {
    return e(0.0, 0.0);
  } catch (const expr::ExprError& err) {
    throw expr::ExprError(err.kind(), err.offset(), "field '" + field + "': " + err.what());
  }
}

expr::Expr function_of_x(const std::string& field, const std::string& source) {
  expr::Expr e = parse_field(field, source);
  if (e.uses_variable('t')) {
    throw Error(ErrorKind::UnknownIdentifier,
                "field '" + field + "': variable 't' is only allowed in the kernel");
  }
  return e;
}

}  // namespace

ProblemSpec load_problem(std::string_view config) {
  static const char* const kKeys[] = {"name", "alpha", "delta", "f", "kernel", "exact"};
  std::map<std::string, std::string> fields;
  std::istringstream in{std::string(config)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorKind::SyntaxError,
                  "line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const std::string key = trim(std::string_view(stripped).substr(0, eq));
    const std::string value = trim(std::string_view(stripped).substr(eq + 1));
    bool known = false;
    for (const char* k : kKeys) known = known || key == k;
    if (!known) {
      throw Error(ErrorKind::InvalidArgument,
                  "line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
    if (!fields.emplace(key, value).second) {
      throw Error(ErrorKind::InvalidArgument,
                  "line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
    }
  }

  for (const char* required : {"name", "alpha", "delta", "f", "kernel"}) {
    auto it = fields.find(required);
    if (it == fields.end() || it->second.empty()) {
      throw Error(ErrorKind::MissingField, std::string("missing field '") + required + "'");
    }
  }

  const double alpha = constant_field("alpha", fields["alpha"]);
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw Error(ErrorKind::OutOfRange,
                "field 'alpha': must lie in (0, 1), got " + fields["alpha"]);
  }
  const double delta = constant_field("delta", fields["delta"]);

  const expr::Expr f = function_of_x("f", fields["f"]);
  const expr::Expr kernel = parse_field("kernel", fields["kernel"]);
  std::optional<ScalarFn> exact;
  if (auto it = fields.find("exact"); it != fields.end() && !it->second.empty()) {
    const expr::Expr ex = function_of_x("exact", it->second);
    exact = [ex](double x) { return ex(x, 0.0); };
  }

  return ProblemSpec(
      fields["name"], alpha, delta, [f](double x) { return f(x, 0.0); },
      [kernel](double x, double t) { return kernel(x, t); }, std::move(exact));
}

ProblemSpec load_problem_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw Error(ErrorKind::Io, "cannot open problem file '" + path + "'");
  std::ostringstream buf;
  buf << file.rdbuf();
  return load_problem(buf.str());
}

std::string serialize_problem(const BuiltinProblem& problem) {
  char num[64];
  std::string out = "# " + problem.key + "\n";
  out += "name = " + problem.spec.name() + "\n";
  std::snprintf(num, sizeof num, "%.17g", problem.spec.alpha());
  out += std::string("alpha = ") + num + "\n";
  std::snprintf(num, sizeof num, "%.17g", problem.spec.delta());
  out += std::string("delta = ") + num + "\n";
  out += "f = " + problem.text.f + "\n";
  out += "kernel = " + problem.text.kernel + "\n";
  if (problem.text.exact) out += "exact = " + *problem.text.exact + "\n";
  return out;
}

}  // namespace fide
