#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fracosc::expr {

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, int column);
  int column;  // 1-based
};

struct EvalError : std::runtime_error {
  EvalError(const std::string& msg, std::string subexpression);
  std::string subexpression;
};

/// Arithmetic over the variables t and x: binary + - * / ^ (right
/// associative, binding tighter than unary minus), sqrt/exp/sin/cos/abs/pow,
/// numeric literals and pi. eval never returns a non-finite value: domain
/// violations and overflow raise EvalError naming the offending
/// subexpression.
class Expression {
 public:
  static Expression parse(std::string_view src);

  double eval(double t, double x) const;

  /// Canonical form with minimal parentheses; reparsing reproduces the
  /// identical tree.
  std::string str() const;

  /// True if the variable x appears anywhere in the tree.
  bool uses_x() const;

  friend bool operator==(const Expression& a, const Expression& b);

 private:
  enum class Kind : unsigned char {
    number, var_t, var_x,
    neg, add, sub, mul, div, pow,
    fn_sqrt, fn_exp, fn_sin, fn_cos, fn_abs,
  };
  struct Node {
    Kind kind;
    double num;
    int a;
    int b;
    friend bool operator==(const Node&, const Node&) = default;
  };

  Expression() = default;

  double eval_node(int i, double t, double x) const;
  std::string print_node(int i) const;
  int prec(int i) const;

  std::vector<Node> nodes_;
  int root_ = -1;

  friend struct Parser;
};

}  // namespace fracosc::expr
