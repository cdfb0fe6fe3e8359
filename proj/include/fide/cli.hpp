#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace fide::cli {

using Cell = std::variant<std::monostate, double, std::string>;

struct OutputTable {
  std::string title;
  std::vector<std::string> headers;
  std::vector<std::vector<Cell>> rows;

  /// Throws InvalidArgument if a row's width differs from the header count.
  void add_row(std::vector<Cell> row);
};

/// Aligned columns, reals to 6 significant digits.
std::string render_text(const OutputTable& table);
/// RFC 4180 style with a header line; reals with 17 significant digits.
std::string render_csv(const OutputTable& table);

/// Exit codes: 0 success, 1 usage or validation failure, 2 numerical failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNumerical = 2;

/// Entry point shared by the executable and the tests. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fide::cli
