#include "fracosc/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <numbers>

namespace fracosc::expr {

ParseError::ParseError(const std::string& msg, int column)
    : std::runtime_error(msg + " at column " + std::to_string(column)),
      column(column) {}

EvalError::EvalError(const std::string& msg, std::string subexpression)
    : std::runtime_error(msg + " in '" + subexpression + "'"),
      subexpression(std::move(subexpression)) {}

namespace {

struct Token {
  enum Type { number, ident, op, end } type;
  double value = 0.0;
  std::string text;
  char ch = 0;
  int col = 0;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    const char c = src[i];
    const int col = static_cast<int>(i) + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '.' && i + 1 < src.size() &&
         std::isdigit(static_cast<unsigned char>(src[i + 1])))) {
      std::size_t j = i;
      while (j < src.size() &&
             (std::isdigit(static_cast<unsigned char>(src[j])) || src[j] == '.')) {
        ++j;
      }
      if (j < src.size() && (src[j] == 'e' || src[j] == 'E')) {
        std::size_t k = j + 1;
        if (k < src.size() && (src[k] == '+' || src[k] == '-')) ++k;
        if (k < src.size() && std::isdigit(static_cast<unsigned char>(src[k]))) {
          ++k;
          while (k < src.size() && std::isdigit(static_cast<unsigned char>(src[k]))) ++k;
          j = k;
        }
      }
      const std::string text(src.substr(i, j - i));
      double v = 0.0;
      const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
      if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
        throw ParseError("malformed number '" + text + "'", col);
      }
      out.push_back({Token::number, v, text, 0, col});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) ||
                                src[j] == '_')) {
        ++j;
      }
      out.push_back({Token::ident, 0.0, std::string(src.substr(i, j - i)), 0, col});
      i = j;
      continue;
    }
    if (std::string_view("+-*/^(),").find(c) != std::string_view::npos) {
      out.push_back({Token::op, 0.0, {}, c, col});
      ++i;
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", col);
  }
  out.push_back({Token::end, 0.0, {}, 0, static_cast<int>(src.size()) + 1});
  return out;
}

}  // namespace

struct Parser {
  const std::vector<Token>& toks;
  std::size_t pos = 0;
  Expression e;

  const Token& cur() const { return toks[pos]; }
  bool is_op(char c) const { return cur().type == Token::op && cur().ch == c; }
  void expect_op(char c, const char* what) {
    if (!is_op(c)) throw ParseError(std::string("expected '") + c + "' " + what, cur().col);
    ++pos;
  }

  int make(Expression::Kind k, double num, int a, int b) {
    e.nodes_.push_back({k, num, a, b});
    return static_cast<int>(e.nodes_.size()) - 1;
  }

  int parse_expr() {
    int lhs = parse_term();
    while (is_op('+') || is_op('-')) {
      const char c = cur().ch;
      ++pos;
      const int rhs = parse_term();
      lhs = make(c == '+' ? Expression::Kind::add : Expression::Kind::sub, 0.0, lhs, rhs);
    }
    return lhs;
  }

  int parse_term() {
    int lhs = parse_unary();
    while (is_op('*') || is_op('/')) {
      const char c = cur().ch;
      ++pos;
      const int rhs = parse_unary();
      lhs = make(c == '*' ? Expression::Kind::mul : Expression::Kind::div, 0.0, lhs, rhs);
    }
    return lhs;
  }

  int parse_unary() {
    if (is_op('-')) {
      ++pos;
      return make(Expression::Kind::neg, 0.0, parse_unary(), -1);
    }
    return parse_power();
  }

  int parse_power() {
    const int base = parse_primary();
    if (is_op('^')) {
      ++pos;
      // exponent may carry its own sign; ^ is right associative
      const int exp = parse_unary();
      return make(Expression::Kind::pow, 0.0, base, exp);
    }
    return base;
  }

  std::vector<int> parse_args() {
    expect_op('(', "before function arguments");
    std::vector<int> args;
    args.push_back(parse_expr());
    while (is_op(',')) {
      ++pos;
      args.push_back(parse_expr());
    }
    expect_op(')', "after function arguments");
    return args;
  }

  int parse_call(const std::string& name, int col) {
    struct Fn { const char* name; Expression::Kind kind; std::size_t arity; };
    static const Fn fns[] = {
        {"sqrt", Expression::Kind::fn_sqrt, 1}, {"exp", Expression::Kind::fn_exp, 1},
        {"sin", Expression::Kind::fn_sin, 1},   {"cos", Expression::Kind::fn_cos, 1},
        {"abs", Expression::Kind::fn_abs, 1},   {"pow", Expression::Kind::pow, 2},
    };
    for (const Fn& f : fns) {
      if (name == f.name) {
        const auto args = parse_args();
        if (args.size() != f.arity) {
          throw ParseError(name + " expects " + std::to_string(f.arity) +
                               (f.arity == 1 ? " argument" : " arguments"),
                           col);
        }
        return make(f.kind, 0.0, args[0], f.arity == 2 ? args[1] : -1);
      }
    }
    throw ParseError("unknown function '" + name + "'", col);
  }

  int parse_primary() {
    const Token& t = cur();
    if (t.type == Token::number) {
      ++pos;
      return make(Expression::Kind::number, t.value, -1, -1);
    }
    if (t.type == Token::ident) {
      ++pos;
      if (is_op('(')) return parse_call(t.text, t.col);
      if (t.text == "t") return make(Expression::Kind::var_t, 0.0, -1, -1);
      if (t.text == "x") return make(Expression::Kind::var_x, 0.0, -1, -1);
      if (t.text == "pi") return make(Expression::Kind::number, std::numbers::pi, -1, -1);
      throw ParseError("unknown identifier '" + t.text + "'", t.col);
    }
    if (is_op('(')) {
      ++pos;
      const int inner = parse_expr();
      expect_op(')', "to close parenthesis");
      return inner;
    }
    throw ParseError("expected a value", t.col);
  }
};

Expression Expression::parse(std::string_view src) {
  const auto toks = lex(src);
  Parser p{toks, 0, {}};
  p.e.root_ = p.parse_expr();
  if (p.cur().type != Token::end) {
    throw ParseError("unexpected trailing input", p.cur().col);
  }
  return std::move(p.e);
}

double Expression::eval_node(int i, double t, double x) const {
  const Node& nd = nodes_[static_cast<std::size_t>(i)];
  double r = 0.0;
  switch (nd.kind) {
    case Kind::number: r = nd.num; break;
    case Kind::var_t: r = t; break;
    case Kind::var_x: r = x; break;
    case Kind::neg: r = -eval_node(nd.a, t, x); break;
    case Kind::add: r = eval_node(nd.a, t, x) + eval_node(nd.b, t, x); break;
    case Kind::sub: r = eval_node(nd.a, t, x) - eval_node(nd.b, t, x); break;
    case Kind::mul: r = eval_node(nd.a, t, x) * eval_node(nd.b, t, x); break;
    case Kind::div: {
      const double num = eval_node(nd.a, t, x);
      const double den = eval_node(nd.b, t, x);
      if (den == 0.0) throw EvalError("division by zero", print_node(i));
      r = num / den;
      break;
    }
    case Kind::pow: {
      const double base = eval_node(nd.a, t, x);
      const double expo = eval_node(nd.b, t, x);
      if (base < 0.0 && expo != std::trunc(expo)) {
        throw EvalError("fractional power of a negative base", print_node(i));
      }
      if (base == 0.0 && expo < 0.0) {
        throw EvalError("zero raised to a negative power", print_node(i));
      }
      r = std::pow(base, expo);
      break;
    }
    case Kind::fn_sqrt: {
      const double arg = eval_node(nd.a, t, x);
      if (arg < 0.0) throw EvalError("square root of a negative number", print_node(i));
      r = std::sqrt(arg);
      break;
    }
    case Kind::fn_exp: r = std::exp(eval_node(nd.a, t, x)); break;
    case Kind::fn_sin: r = std::sin(eval_node(nd.a, t, x)); break;
    case Kind::fn_cos: r = std::cos(eval_node(nd.a, t, x)); break;
    case Kind::fn_abs: r = std::abs(eval_node(nd.a, t, x)); break;
  }
  if (!std::isfinite(r)) throw EvalError("non-finite result", print_node(i));
  return r;
}

double Expression::eval(double t, double x) const { return eval_node(root_, t, x); }

int Expression::prec(int i) const {
  switch (nodes_[static_cast<std::size_t>(i)].kind) {
    case Kind::add: case Kind::sub: return 1;
    case Kind::mul: case Kind::div: return 2;
    case Kind::neg: return 3;
    case Kind::pow: return 4;
    default: return 5;
  }
}

std::string Expression::print_node(int i) const {
  const Node& nd = nodes_[static_cast<std::size_t>(i)];
  const auto wrap = [this](int child, bool parens) {
    const std::string s = print_node(child);
    return parens ? "(" + s + ")" : s;
  };
  switch (nd.kind) {
    case Kind::number: {
      char buf[32];
      const auto res = std::to_chars(buf, buf + sizeof(buf), nd.num);
      return std::string(buf, res.ptr);
    }
    case Kind::var_t: return "t";
    case Kind::var_x: return "x";
    case Kind::neg: return "-" + wrap(nd.a, prec(nd.a) < 3);
    case Kind::add:
      return wrap(nd.a, prec(nd.a) < 1) + "+" + wrap(nd.b, prec(nd.b) <= 1);
    case Kind::sub:
      return wrap(nd.a, prec(nd.a) < 1) + "-" + wrap(nd.b, prec(nd.b) <= 1);
    case Kind::mul:
      return wrap(nd.a, prec(nd.a) < 2) + "*" + wrap(nd.b, prec(nd.b) <= 2);
    case Kind::div:
      return wrap(nd.a, prec(nd.a) < 2) + "/" + wrap(nd.b, prec(nd.b) <= 2);
    case Kind::pow:
      return wrap(nd.a, prec(nd.a) <= 4) + "^" + wrap(nd.b, prec(nd.b) < 3);
    case Kind::fn_sqrt: return "sqrt(" + print_node(nd.a) + ")";
    case Kind::fn_exp: return "exp(" + print_node(nd.a) + ")";
    case Kind::fn_sin: return "sin(" + print_node(nd.a) + ")";
    case Kind::fn_cos: return "cos(" + print_node(nd.a) + ")";
    case Kind::fn_abs: return "abs(" + print_node(nd.a) + ")";
  }
  return {};
}

std::string Expression::str() const { return print_node(root_); }

bool Expression::uses_x() const {
  for (const Node& nd : nodes_) {
    if (nd.kind == Kind::var_x) return true;
  }
  return false;
}

bool operator==(const Expression& a, const Expression& b) {
  return a.root_ == b.root_ && a.nodes_ == b.nodes_;
}

}  // namespace fracosc::expr
