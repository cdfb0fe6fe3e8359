#pragma once

// Arithmetic expressions in x and t for problem definitions.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' unary)?          right-associative
//   primary := NUMBER | IDENT | IDENT '(' expr (',' expr)* ')' | '(' expr ')'
//
// Variables: x, t. Constants: pi, e. Functions: exp, ln, sqrt, sin, cos, abs, gamma.
// No implicit multiplication.

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fide/error.hpp"

namespace fide::expr {

struct Node;
using NodePtr = std::shared_ptr<const Node>;

enum class BinaryOp { Add, Sub, Mul, Div, Pow };

struct Number {
  double value;
};
struct Variable {
  char name;  // 'x' or 't'
};
struct Constant {
  std::string name;
  double value;
};
struct Negate {
  NodePtr child;
};
struct Binary {
  BinaryOp op;
  NodePtr lhs;
  NodePtr rhs;
};
struct Call {
  std::string name;
  std::vector<NodePtr> args;
};

struct Node {
  std::variant<Number, Variable, Constant, Negate, Binary, Call> data;
  std::size_t offset = 0;  // byte offset of the node in the source
};

/// Parse, lookup, arity and evaluation failures. `offset()` is a byte offset
/// into the source text.
class ExprError : public Error {
 public:
  ExprError(ErrorKind kind, std::size_t offset, const std::string& message)
      : Error(kind, message), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Immutable parsed expression; cheap to copy and safe to share across threads.
class Expr {
 public:
  Expr(NodePtr root, std::string source)
      : root_(std::move(root)), source_(std::move(source)) {}

  const Node& root() const noexcept { return *root_; }
  const std::string& source() const noexcept { return source_; }

  double operator()(double x, double t = 0.0) const;

  bool uses_variable(char name) const;

 private:
  NodePtr root_;
  std::string source_;
};

Expr parse(std::string_view source);

double eval(const Expr& expr, double x, double t);

/// Minimal-parenthesis rendering that reparses to the same tree.
std::string to_string(const Expr& expr);

/// Same shape, operators, names and literal values; offsets ignored.
bool structurally_equal(const Node& a, const Node& b);
bool structurally_equal(const Expr& a, const Expr& b);

}  // namespace fide::expr
