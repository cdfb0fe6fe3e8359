#include "fide/expr.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <utility>

#include "fide/core.hpp"

namespace fide::expr {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, End };

struct Token {
  Tok kind;
  std::size_t offset;
  std::string_view text;
  double number = 0.0;
};

std::string describe(const Token& tok) {
  if (tok.kind == Tok::End) return "end of input";
  return "'" + std::string(tok.text) + "'";
}

struct FunctionInfo {
  std::string_view name;
  std::size_t arity;
};

constexpr std::array<FunctionInfo, 7> kFunctions = {{
    {"exp", 1}, {"ln", 1}, {"sqrt", 1}, {"sin", 1}, {"cos", 1}, {"abs", 1}, {"gamma", 1},
}};

const FunctionInfo* find_function(std::string_view name) {
  for (const auto& f : kFunctions) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

std::optional<double> find_constant(std::string_view name) {
  if (name == "pi") return std::numbers::pi;
  if (name == "e") return std::numbers::e;
  return std::nullopt;
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    const std::size_t start = pos_;
    if (pos_ >= src_.size()) return {Tok::End, start, {}};

    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return lex_number(start);
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        ++pos_;
      }
      return {Tok::Ident, start, src_.substr(start, pos_ - start)};
    }

    ++pos_;
    const auto single = [&](Tok kind) { return Token{kind, start, src_.substr(start, 1)}; };
    switch (c) {
      case '+': return single(Tok::Plus);
      case '-': return single(Tok::Minus);
      case '*': return single(Tok::Star);
      case '/': return single(Tok::Slash);
      case '^': return single(Tok::Caret);
      case '(': return single(Tok::LParen);
      case ')': return single(Tok::RParen);
      case ',': return single(Tok::Comma);
      default: break;
    }
    throw ExprError(ErrorKind::SyntaxError, start,
                    "unexpected character '" + std::string(1, c) + "' at offset " +
                        std::to_string(start));
  }

 private:
  Token lex_number(std::size_t start) {
    const auto digits = [&] {
      std::size_t count = 0;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        ++pos_;
        ++count;
      }
      return count;
    };
    std::size_t mantissa = digits();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      mantissa += digits();
    }
    if (mantissa == 0) {
      throw ExprError(ErrorKind::SyntaxError, start,
                      "malformed number at offset " + std::to_string(start));
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      // Only an exponent if digits follow; otherwise leave 'e' for the next token.
      std::size_t look = pos_ + 1;
      if (look < src_.size() && (src_[look] == '+' || src_[look] == '-')) ++look;
      if (look < src_.size() && std::isdigit(static_cast<unsigned char>(src_[look]))) {
        pos_ = look;
        digits();
      }
    }
    Token tok{Tok::Number, start, src_.substr(start, pos_ - start)};
    const auto* first = tok.text.data();
    const auto* last = first + tok.text.size();
    auto [ptr, ec] = std::from_chars(first, last, tok.number);
    if (ec != std::errc{} || ptr != last || !std::isfinite(tok.number)) {
      throw ExprError(ErrorKind::SyntaxError, start,
                      "malformed number '" + std::string(tok.text) + "' at offset " +
                          std::to_string(start));
    }
    return tok;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lexer_(src) { advance(); }

  NodePtr parse_all() {
    NodePtr root = parse_expr();
    if (cur_.kind != Tok::End) {
      fail("expected an operator or end of input, found " + describe(cur_));
    }
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ExprError(ErrorKind::SyntaxError, cur_.offset,
                    what + " at offset " + std::to_string(cur_.offset));
  }

  void advance() { cur_ = lexer_.next(); }

  static NodePtr make(std::size_t offset, auto data) {
    return std::make_shared<const Node>(Node{std::move(data), offset});
  }

  NodePtr parse_expr() {
    NodePtr lhs = parse_term();
    while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
      const Token op = cur_;
      advance();
      NodePtr rhs = parse_term();
      lhs = make(op.offset, Binary{op.kind == Tok::Plus ? BinaryOp::Add : BinaryOp::Sub,
                                   std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  NodePtr parse_term() {
    NodePtr lhs = parse_unary();
    while (cur_.kind == Tok::Star || cur_.kind == Tok::Slash) {
      const Token op = cur_;
      advance();
      NodePtr rhs = parse_unary();
      lhs = make(op.offset, Binary{op.kind == Tok::Star ? BinaryOp::Mul : BinaryOp::Div,
                                   std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  NodePtr parse_unary() {
    if (cur_.kind == Tok::Minus) {
      const std::size_t at = cur_.offset;
      advance();
      return make(at, Negate{parse_unary()});
    }
    return parse_power();
  }

  NodePtr parse_power() {
    NodePtr base = parse_primary();
    if (cur_.kind == Tok::Caret) {
      const std::size_t at = cur_.offset;
      advance();
      NodePtr exponent = parse_unary();
      return make(at, Binary{BinaryOp::Pow, std::move(base), std::move(exponent)});
    }
    return base;
  }

  NodePtr parse_primary() {
    const Token tok = cur_;
    switch (tok.kind) {
      case Tok::Number:
        advance();
        return make(tok.offset, Number{tok.number});
      case Tok::LParen: {
        advance();
        NodePtr inner = parse_expr();
        if (cur_.kind != Tok::RParen) fail("expected ')', found " + describe(cur_));
        advance();
        return inner;
      }
      case Tok::Ident:
        advance();
        return parse_identifier(tok);
      default:
        fail("expected a number, variable, function call or '(', found " + describe(tok));
    }
  }

  NodePtr parse_identifier(const Token& tok) {
    const std::string name(tok.text);
    if (cur_.kind == Tok::LParen) {
      const FunctionInfo* fn = find_function(name);
      if (fn == nullptr) {
        throw ExprError(ErrorKind::UnknownIdentifier, tok.offset,
                        "unknown function '" + name + "' at offset " +
                            std::to_string(tok.offset));
      }
      advance();
      std::vector<NodePtr> args;
      args.push_back(parse_expr());
      while (cur_.kind == Tok::Comma) {
        advance();
        args.push_back(parse_expr());
      }
      if (cur_.kind != Tok::RParen) fail("expected ',' or ')', found " + describe(cur_));
      advance();
      if (args.size() != fn->arity) {
        throw ExprError(ErrorKind::ArityMismatch, tok.offset,
                        "function '" + name + "' takes " + std::to_string(fn->arity) +
                            " argument(s), got " + std::to_string(args.size()) +
                            " at offset " + std::to_string(tok.offset));
      }
      return make(tok.offset, Call{name, std::move(args)});
    }
    if (name == "x" || name == "t") return make(tok.offset, Variable{name[0]});
    if (auto value = find_constant(name)) return make(tok.offset, Constant{name, *value});
    if (find_function(name) != nullptr) {
      fail("expected '(' after function name '" + name + "'");
    }
    throw ExprError(ErrorKind::UnknownIdentifier, tok.offset,
                    "unknown identifier '" + name + "' at offset " +
                        std::to_string(tok.offset));
  }

  Lexer lexer_;
  Token cur_{Tok::End, 0, {}};
};

[[noreturn]] void eval_fail(const Node& node, const std::string& what) {
  throw ExprError(ErrorKind::EvalError, node.offset,
                  what + " (node at offset " + std::to_string(node.offset) + ")");
}

double checked(const Node& node, double value) {
  if (!std::isfinite(value)) eval_fail(node, "non-finite result");
  return value;
}

double eval_node(const Node& node, double x, double t);

double eval_call(const Node& node, const Call& call, double x, double t) {
  const double a = eval_node(*call.args[0], x, t);
  const std::string& f = call.name;
  if (f == "exp") return checked(node, std::exp(a));
  if (f == "ln") {
    if (!(a > 0.0)) eval_fail(node, "ln of non-positive value");
    return std::log(a);
  }
  if (f == "sqrt") {
    if (a < 0.0) eval_fail(node, "sqrt of negative value");
    return std::sqrt(a);
  }
  if (f == "sin") return std::sin(a);
  if (f == "cos") return std::cos(a);
  if (f == "abs") return std::abs(a);
  if (f == "gamma") {
    try {
      return fide::gamma(a);
    } catch (const Error& e) {
      eval_fail(node, e.what());
    }
  }
  eval_fail(node, "unknown function '" + f + "'");
}

double eval_binary(const Node& node, const Binary& bin, double x, double t) {
  const double l = eval_node(*bin.lhs, x, t);
  const double r = eval_node(*bin.rhs, x, t);
  switch (bin.op) {
    case BinaryOp::Add: return checked(node, l + r);
    case BinaryOp::Sub: return checked(node, l - r);
    case BinaryOp::Mul: return checked(node, l * r);
    case BinaryOp::Div:
      if (r == 0.0) eval_fail(node, "division by zero");
      return checked(node, l / r);
    case BinaryOp::Pow:
      if (l < 0.0 && r != std::floor(r)) {
        eval_fail(node, "negative base with non-integer exponent");
      }
      return checked(node, std::pow(l, r));
  }
  eval_fail(node, "unknown operator");
}

double eval_node(const Node& node, double x, double t) {
  return std::visit(
      [&](const auto& n) -> double {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Number>) {
          return n.value;
        } else if constexpr (std::is_same_v<T, Variable>) {
          return n.name == 'x' ? x : t;
        } else if constexpr (std::is_same_v<T, Constant>) {
          return n.value;
        } else if constexpr (std::is_same_v<T, Negate>) {
          return -eval_node(*n.child, x, t);
        } else if constexpr (std::is_same_v<T, Binary>) {
          return eval_binary(node, n, x, t);
        } else {
          return eval_call(node, n, x, t);
        }
      },
      node.data);
}

bool uses(const Node& node, char name) {
  return std::visit(
      [&](const auto& n) -> bool {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Variable>) {
          return n.name == name;
        } else if constexpr (std::is_same_v<T, Negate>) {
          return uses(*n.child, name);
        } else if constexpr (std::is_same_v<T, Binary>) {
          return uses(*n.lhs, name) || uses(*n.rhs, name);
        } else if constexpr (std::is_same_v<T, Call>) {
          for (const auto& a : n.args) {
            if (uses(*a, name)) return true;
          }
          return false;
        } else {
          return false;
        }
      },
      node.data);
}

// Printing precedence; higher binds tighter.
constexpr int kPrecAdd = 1;
constexpr int kPrecMul = 2;
constexpr int kPrecUnary = 3;
constexpr int kPrecPow = 4;
constexpr int kPrecAtom = 5;

int precedence(const Node& node) {
  if (const auto* b = std::get_if<Binary>(&node.data)) {
    switch (b->op) {
      case BinaryOp::Add:
      case BinaryOp::Sub: return kPrecAdd;
      case BinaryOp::Mul:
      case BinaryOp::Div: return kPrecMul;
      case BinaryOp::Pow: return kPrecPow;
    }
  }
  if (std::holds_alternative<Negate>(node.data)) return kPrecUnary;
  return kPrecAtom;
}

void print(const Node& node, std::string& out);

void print_wrapped(const Node& node, bool wrap, std::string& out) {
  if (wrap) out += '(';
  print(node, out);
  if (wrap) out += ')';
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void print(const Node& node, std::string& out) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Number>) {
          out += format_number(n.value);
        } else if constexpr (std::is_same_v<T, Variable>) {
          out += n.name;
        } else if constexpr (std::is_same_v<T, Constant>) {
          out += n.name;
        } else if constexpr (std::is_same_v<T, Negate>) {
          out += '-';
          print_wrapped(*n.child, precedence(*n.child) < kPrecUnary, out);
        } else if constexpr (std::is_same_v<T, Binary>) {
          const int p = precedence(node);
          if (n.op == BinaryOp::Pow) {
            print_wrapped(*n.lhs, precedence(*n.lhs) <= kPrecPow, out);
            out += "^";
            print_wrapped(*n.rhs, precedence(*n.rhs) < kPrecUnary, out);
            return;
          }
          static constexpr std::array<const char*, 4> kOps = {" + ", " - ", "*", "/"};
          print_wrapped(*n.lhs, precedence(*n.lhs) < p, out);
          out += kOps[static_cast<std::size_t>(n.op)];
          print_wrapped(*n.rhs, precedence(*n.rhs) <= p, out);
        } else {
          out += n.name;
          out += '(';
          for (std::size_t i = 0; i < n.args.size(); ++i) {
            if (i > 0) out += ", ";
            print(*n.args[i], out);
          }
          out += ')';
        }
      },
      node.data);
}

}  // namespace

Expr parse(std::string_view source) {
  bool blank = true;
  for (char c : source) {
    if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
  }
  if (blank) throw ExprError(ErrorKind::SyntaxError, 0, "empty expression");
  Parser parser(source);
  return Expr(parser.parse_all(), std::string(source));
}

double eval(const Expr& expr, double x, double t) {
  return checked(expr.root(), eval_node(expr.root(), x, t));
}

double Expr::operator()(double x, double t) const { return eval(*this, x, t); }

bool Expr::uses_variable(char name) const { return uses(*root_, name); }

std::string to_string(const Expr& expr) {
  std::string out;
  print(expr.root(), out);
  return out;
}

bool structurally_equal(const Node& a, const Node& b) {
  if (a.data.index() != b.data.index()) return false;
  return std::visit(
      [&](const auto& lhs) -> bool {
        using T = std::decay_t<decltype(lhs)>;
        const auto& rhs = std::get<T>(b.data);
        if constexpr (std::is_same_v<T, Number>) {
          return lhs.value == rhs.value;
        } else if constexpr (std::is_same_v<T, Variable>) {
          return lhs.name == rhs.name;
        } else if constexpr (std::is_same_v<T, Constant>) {
          return lhs.name == rhs.name;
        } else if constexpr (std::is_same_v<T, Negate>) {
          return structurally_equal(*lhs.child, *rhs.child);
        } else if constexpr (std::is_same_v<T, Binary>) {
          return lhs.op == rhs.op && structurally_equal(*lhs.lhs, *rhs.lhs) &&
                 structurally_equal(*lhs.rhs, *rhs.rhs);
        } else {
          if (lhs.name != rhs.name || lhs.args.size() != rhs.args.size()) return false;
          for (std::size_t i = 0; i < lhs.args.size(); ++i) {
            if (!structurally_equal(*lhs.args[i], *rhs.args[i])) return false;
          }
          return true;
        }
      },
      a.data);
}

bool structurally_equal(const Expr& a, const Expr& b) {
  return structurally_equal(a.root(), b.root());
}

}  // namespace fide::expr
