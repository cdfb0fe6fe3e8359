#include "fide/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "fide/analysis.hpp"
#include "fide/core.hpp"
#include "fide/error.hpp"
#include "fide/problems.hpp"
#include "fide/solver.hpp"

namespace fide::cli {

void OutputTable::add_row(std::vector<Cell> row) {
  if (row.size() != headers.size()) {
    throw Error(ErrorKind::InvalidArgument,
                "table row has " + std::to_string(row.size()) + " cells, expected " +
                    std::to_string(headers.size()));
  }
  rows.push_back(std::move(row));
}

namespace {

std::string format_real(double v, int digits) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::string cell_text(const Cell& cell, int digits) {
  if (const auto* d = std::get_if<double>(&cell)) return format_real(*d, digits);
  if (const auto* s = std::get_if<std::string>(&cell)) return *s;
  return {};
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string render_text(const OutputTable& table) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width(table.headers.size(), 0);
  for (std::size_t c = 0; c < table.headers.size(); ++c) width[c] = table.headers[c].size();
  for (const auto& row : table.rows) {
    auto& out = cells.emplace_back();
    for (std::size_t c = 0; c < row.size(); ++c) {
      out.push_back(cell_text(row[c], 6));
      width[c] = std::max(width[c], out.back().size());
    }
  }
  std::string text;
  if (!table.title.empty()) text += table.title + "\n";
  const auto emit = [&](const std::vector<std::string>& line) {
    std::string row;
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c > 0) row += "  ";
      row += std::string(width[c] - line[c].size(), ' ') + line[c];
    }
    text += row + "\n";
  };
  emit(table.headers);
  for (const auto& line : cells) emit(line);
  return text;
}

std::string render_csv(const OutputTable& table) {
  std::string text;
  const auto emit = [&](const std::vector<std::string>& line) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c > 0) text += ',';
      text += csv_escape(line[c]);
    }
    text += "\r\n";
  };
  emit(table.headers);
  for (const auto& row : table.rows) {
    std::vector<std::string> line;
    for (const auto& cell : row) line.push_back(cell_text(cell, 17));
    emit(line);
  }
  return text;
}

namespace {

// Validation failures map to exit 1; anything thrown while computing maps to 2.
struct UsageError {
  std::string message;
};

struct CommonOptions {
  std::string problem;
  std::string format = "text";
  std::string out_path;
  std::optional<int> quad_order;
};

struct ResolvedProblem {
  ProblemSpec spec;
  std::optional<BuiltinProblem> builtin;
};

ResolvedProblem resolve_problem(const std::string& key) {
  if (auto builtin = find_builtin(key)) return {builtin->spec, builtin};
  try {
    return {load_problem_file(key), std::nullopt};
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Io) {
      throw UsageError{"unknown problem '" + key +
                       "': not a built-in (ex5.1, ex5.2, ex5.3) and not a readable file"};
    }
    throw UsageError{std::string(to_string(e.kind())) + ": " + e.what()};
  }
}

QuadratureRule resolve_rule(const std::optional<int>& flag) {
  int order = kDefaultQuadOrder;
  if (flag) {
    order = *flag;
  } else if (const char* env = std::getenv("FIDE_QUAD_ORDER"); env && *env) {
    const std::string_view text(env);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), order);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
      throw UsageError{"FIDE_QUAD_ORDER must be an integer, got '" + std::string(text) + "'"};
    }
  }
  try {
    return gauss_legendre(order);
  } catch (const Error& e) {
    throw UsageError{e.what()};
  }
}

std::vector<std::size_t> parse_ladder(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t value = 0;
    const auto* first = item.data();
    const auto* last = first + item.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (item.empty() || ec != std::errc{} || ptr != last) {
      throw UsageError{"invalid n-ladder entry '" + item + "'"};
    }
    out.push_back(value);
  }
  try {
    validate_ladder(out);
  } catch (const Error& e) {
    throw UsageError{e.what()};
  }
  return out;
}

SchemeKind scheme_flag(const std::string& text) {
  try {
    return parse_scheme(text);
  } catch (const Error& e) {
    throw UsageError{e.what()};
  }
}

std::vector<SchemeKind> scheme_list(const std::string& text) {
  std::vector<SchemeKind> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(scheme_flag(item));
  if (out.empty()) throw UsageError{"no schemes given (valid: s1, s2, s3)"};
  return out;
}

void check_format(const std::string& format) {
  if (format != "text" && format != "csv") {
    throw UsageError{"unknown format '" + format + "' (valid: text, csv)"};
  }
}

std::string render_text(const std::vector<OutputTable>& tables) {
  std::string text;
  for (std::size_t i = 0; i < tables.size(); ++i) {
    if (i > 0) text += "\n";
    text += render_text(tables[i]);
  }
  return text;
}

void emit(const std::string& text, const CommonOptions& opts, std::ostream& out) {
  if (opts.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opts.out_path, std::ios::binary);
  if (!file || !(file << text)) {
    throw UsageError{"cannot write output file '" + opts.out_path + "'"};
  }
}

std::string run_solve(const CommonOptions& opts, const std::string& scheme_text,
                      std::size_t n) {
  check_format(opts.format);
  const SchemeKind scheme = scheme_flag(scheme_text);
  if (n == 0) throw UsageError{"--n must be positive"};
  const QuadratureRule rule = resolve_rule(opts.quad_order);
  const ResolvedProblem problem = resolve_problem(opts.problem);

  const SolveResult result = solve(problem.spec, scheme, n, rule);

  OutputTable table;
  table.title = problem.spec.name() + ", scheme " + std::string(to_string(scheme)) +
                ", n = " + std::to_string(n);
  table.headers = {"x_j", "numerical"};
  if (result.errors) {
    table.headers.push_back("exact");
    table.headers.push_back("error");
  }
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<Cell> row{result.mesh.node(k), result.values[k]};
    if (result.errors) {
      row.emplace_back((*problem.spec.exact())(result.mesh.node(k)));
      row.emplace_back((*result.errors)[k]);
    }
    table.add_row(std::move(row));
  }
  return opts.format == "csv" ? render_csv(table) : render_text(table);
}

std::string run_convergence(const CommonOptions& opts, const std::string& schemes_text,
                            const std::string& ladder_text) {
  check_format(opts.format);
  const auto schemes = scheme_list(schemes_text);
  const auto ladder = parse_ladder(ladder_text);
  const QuadratureRule rule = resolve_rule(opts.quad_order);
  const ResolvedProblem problem = resolve_problem(opts.problem);
  if (!problem.spec.has_exact()) {
    throw UsageError{"problem '" + problem.spec.name() +
                     "' has no exact solution, so MAE is undefined"};
  }

  std::vector<ConvergenceReport> reports;
  for (SchemeKind s : schemes) {
    reports.push_back(convergence_study(problem.spec, s, ladder, rule));
  }

  if (opts.format == "csv") {
    OutputTable table;
    table.headers = {"scheme", "n", "h", "mae", "co"};
    for (const auto& rep : reports) {
      for (const auto& row : rep.rows) {
        table.add_row({std::string(to_string(rep.scheme)), std::to_string(row.n), row.h,
                       row.mae, row.co ? Cell{*row.co} : Cell{}});
      }
    }
    return render_csv(table);
  }
  std::vector<OutputTable> tables;
  for (const auto& rep : reports) {
    OutputTable table;
    table.title = rep.problem_name + ", scheme " + std::string(to_string(rep.scheme)) +
                  ": maximum absolute error and convergence order";
    table.headers = {"h", "MAE", "CO"};
    for (const auto& row : rep.rows) {
      table.add_row({"1/" + std::to_string(row.n), row.mae,
                     row.co ? Cell{*row.co} : Cell{}});
    }
    tables.push_back(std::move(table));
  }
  return render_text(tables);
}

std::string run_bounds(const CommonOptions& opts, const std::string& scheme_text,
                       const std::string& ladder_text) {
  check_format(opts.format);
  const SchemeKind scheme = scheme_flag(scheme_text);
  const auto ladder = parse_ladder(ladder_text);
  const QuadratureRule rule = resolve_rule(opts.quad_order);
  const auto builtin = find_builtin(opts.problem);
  if (!builtin) {
    throw UsageError{"bounds needs a built-in problem (ex5.1, ex5.2), got '" +
                     opts.problem + "'"};
  }
  if (!builtin->bounded()) {
    throw UsageError{builtin->key +
                     ": exact solution x^(3/2) is not in C^2[0, 1] (phi'' is unbounded at "
                     "x = 0), so the error bounds do not apply"};
  }

  OutputTable table;
  table.title = builtin->spec.name() + ", scheme " + std::string(to_string(scheme)) +
                ": measured MAE against the a priori bound at k = n";
  table.headers = {"n", "h", "MAE", "bound", "ratio"};
  for (std::size_t n : ladder) {
    const SolveResult result = solve(builtin->spec, scheme, n, rule);
    const double measured = mae(result);
    const double bound = theorem_bound(scheme, n, bound_inputs(*builtin, result.mesh, n));
    table.add_row({std::to_string(n), result.mesh.h(), measured, bound, measured / bound});
  }
  return opts.format == "csv" ? render_csv(table) : render_text(table);
}

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--problem", opts.problem,
                  "ex5.1 | ex5.2 | ex5.3 | path to a problem config")
      ->required();
  cmd->add_option("--format", opts.format, "text | csv")->capture_default_str();
  cmd->add_option("--out", opts.out_path, "write the table to this file");
  cmd->add_option("--quad-order", opts.quad_order,
                  "Gauss-Legendre order for kernel moments (default 10, or FIDE_QUAD_ORDER)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Solver for linear fractional integro-differential equations on [0, 1]",
               "fide"};
  app.require_subcommand(1);

  CommonOptions opts;
  std::string scheme = "s1";
  std::string schemes = "s1,s2,s3";
  std::string ladder = "5,10,20,40,80";
  std::size_t n = 0;

  auto* solve_cmd = app.add_subcommand("solve", "solve one problem with one scheme");
  add_common(solve_cmd, opts);
  solve_cmd->add_option("--scheme", scheme, "s1 | s2 | s3")->required();
  solve_cmd->add_option("--n", n, "number of subintervals")->required();

  auto* conv_cmd = app.add_subcommand("convergence", "MAE / convergence-order ladder");
  add_common(conv_cmd, opts);
  conv_cmd->add_option("--schemes,--scheme", schemes, "comma-separated schemes")
      ->capture_default_str();
  conv_cmd->add_option("--n-ladder", ladder, "comma-separated n, each double the last")
      ->capture_default_str();

  auto* bounds_cmd = app.add_subcommand("bounds", "measured MAE against the error bounds");
  add_common(bounds_cmd, opts);
  bounds_cmd->add_option("--scheme", scheme, "s1 | s2 | s3")->required();
  bounds_cmd->add_option("--n-ladder", ladder, "comma-separated n, each double the last")
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name

  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    std::string text;
    if (solve_cmd->parsed()) {
      text = run_solve(opts, scheme, n);
    } else if (conv_cmd->parsed()) {
      text = run_convergence(opts, schemes, ladder);
    } else {
      text = run_bounds(opts, scheme, ladder);
    }
    emit(text, opts, out);
    return kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.message << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return kExitNumerical;
  }
}

}  // namespace fide::cli
