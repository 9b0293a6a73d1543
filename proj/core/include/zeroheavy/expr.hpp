#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "zeroheavy/rational.hpp"

namespace zeroheavy {

enum class Op { Const, Var, Neg, Add, Sub, Mul, Div, Pow, Exp, Ln, Sin, Cos };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Immutable expression node over one variable x.
struct Expr {
  Op op;
  Rational value;     // Const
  long exponent = 0;  // Pow
  ExprPtr lhs;        // unary operand, or left operand
  ExprPtr rhs;        // right operand of binary nodes
};

namespace expr {

ExprPtr constant(const Rational& v);
ExprPtr variable();
ExprPtr neg(ExprPtr a);
ExprPtr add(ExprPtr a, ExprPtr b);
ExprPtr sub(ExprPtr a, ExprPtr b);
ExprPtr mul(ExprPtr a, ExprPtr b);
ExprPtr div(ExprPtr a, ExprPtr b);
ExprPtr pow(ExprPtr a, long exponent);
ExprPtr apply(Op fn, ExprPtr a);

bool is_constant(const ExprPtr& e);
/// Symbolic derivative with light constant folding.
ExprPtr derivative(const ExprPtr& e);
/// Replaces x by `inner`.
ExprPtr substitute(const ExprPtr& e, const ExprPtr& inner);
/// Re-parsable infix rendering.
std::string to_string(const ExprPtr& e);
/// True when no transcendental node occurs (evaluation is exact on rationals).
bool is_arithmetic(const ExprPtr& e);

}  // namespace expr

/// A parsed C^1 function together with its symbolic derivative.
class FunctionSpec {
 public:
  explicit FunctionSpec(ExprPtr e);

  const ExprPtr& expression() const { return expr_; }
  const ExprPtr& derivative_expression() const { return deriv_; }
  /// The derivative as a FunctionSpec of its own (computes f'').
  FunctionSpec derivative() const { return FunctionSpec(deriv_); }
  /// f(inner(x)).
  FunctionSpec compose(const ExprPtr& inner) const;
  std::string to_string() const { return expr::to_string(expr_); }
  bool arithmetic_only() const { return expr::is_arithmetic(expr_); }

 private:
  ExprPtr expr_;
  ExprPtr deriv_;
};

/// Parses the function grammar:
///   expr := term (('+'|'-') term)*; term := factor (('*'|'/') factor)*;
///   factor := base ('^' integer)?; base := number | 'x' | '(' expr ')' |
///   func '(' expr ')' | '-' base; func := exp | ln | sin | cos.
/// Throws ParseError with the offending position.
FunctionSpec parse(std::string_view text);

}  // namespace zeroheavy
