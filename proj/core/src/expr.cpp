#include "zeroheavy/expr.hpp"

#include "zeroheavy/errors.hpp"

namespace zeroheavy {
namespace expr {
namespace {

ExprPtr make(Op op, ExprPtr a = nullptr, ExprPtr b = nullptr) {
  auto e = std::make_shared<Expr>();
  e->op = op;
  e->lhs = std::move(a);
  e->rhs = std::move(b);
  return e;
}

bool is_value(const ExprPtr& e, long v) { return e->op == Op::Const && e->value == v; }

const char* function_name(Op op) {
  switch (op) {
    case Op::Exp: return "exp";
    case Op::Ln: return "ln";
    case Op::Sin: return "sin";
    case Op::Cos: return "cos";
    default: return "?";
  }
}

}  // namespace

ExprPtr constant(const Rational& v) {
  auto e = std::make_shared<Expr>();
  e->op = Op::Const;
  e->value = v;
  return e;
}

ExprPtr variable() { return make(Op::Var); }

ExprPtr neg(ExprPtr a) {
  if (a->op == Op::Const) return constant(-a->value);
  if (a->op == Op::Neg) return a->lhs;
  return make(Op::Neg, std::move(a));
}

ExprPtr add(ExprPtr a, ExprPtr b) {
  if (a->op == Op::Const && b->op == Op::Const) return constant(a->value + b->value);
  if (is_value(a, 0)) return b;
  if (is_value(b, 0)) return a;
  return make(Op::Add, std::move(a), std::move(b));
}

ExprPtr sub(ExprPtr a, ExprPtr b) {
  if (a->op == Op::Const && b->op == Op::Const) return constant(a->value - b->value);
  if (is_value(b, 0)) return a;
  if (is_value(a, 0)) return neg(std::move(b));
  return make(Op::Sub, std::move(a), std::move(b));
}

ExprPtr mul(ExprPtr a, ExprPtr b) {
  if (a->op == Op::Const && b->op == Op::Const) return constant(a->value * b->value);
  if (is_value(a, 0) || is_value(b, 0)) return constant(Rational(0));
  if (is_value(a, 1)) return b;
  if (is_value(b, 1)) return a;
  if (is_value(a, -1)) return neg(std::move(b));
  if (is_value(b, -1)) return neg(std::move(a));
  return make(Op::Mul, std::move(a), std::move(b));
}

ExprPtr div(ExprPtr a, ExprPtr b) {
  if (is_value(b, 0)) throw DomainError("division by zero");
  if (a->op == Op::Const && b->op == Op::Const) return constant(a->value / b->value);
  if (is_value(b, 1)) return a;
  return make(Op::Div, std::move(a), std::move(b));
}

ExprPtr pow(ExprPtr a, long exponent) {
  if (exponent == 0) return constant(Rational(1));
  if (exponent == 1) return a;
  if (a->op == Op::Const) return constant(pow_int(a->value, exponent));
  auto e = make(Op::Pow, std::move(a));
  std::const_pointer_cast<Expr>(e)->exponent = exponent;
  return e;
}

ExprPtr apply(Op fn, ExprPtr a) {
  if (is_value(a, 0)) {
    if (fn == Op::Exp || fn == Op::Cos) return constant(Rational(1));
    if (fn == Op::Sin) return constant(Rational(0));
  }
  if (fn == Op::Ln && is_value(a, 1)) return constant(Rational(0));
  return make(fn, std::move(a));
}

bool is_constant(const ExprPtr& e) {
  switch (e->op) {
    case Op::Const: return true;
    case Op::Var: return false;
    default:
      return is_constant(e->lhs) && (!e->rhs || is_constant(e->rhs));
  }
}

bool is_arithmetic(const ExprPtr& e) {
  switch (e->op) {
    case Op::Const:
    case Op::Var: return true;
    case Op::Exp:
    case Op::Ln:
    case Op::Sin:
    case Op::Cos: return false;
    default:
      return is_arithmetic(e->lhs) && (!e->rhs || is_arithmetic(e->rhs));
  }
}

ExprPtr derivative(const ExprPtr& e) {
  switch (e->op) {
    case Op::Const: return constant(Rational(0));
    case Op::Var: return constant(Rational(1));
    case Op::Neg: return neg(derivative(e->lhs));
    case Op::Add: return add(derivative(e->lhs), derivative(e->rhs));
    case Op::Sub: return sub(derivative(e->lhs), derivative(e->rhs));
    case Op::Mul:
      return add(mul(derivative(e->lhs), e->rhs), mul(e->lhs, derivative(e->rhs)));
    case Op::Div:
      return div(sub(mul(derivative(e->lhs), e->rhs), mul(e->lhs, derivative(e->rhs))), pow(e->rhs, 2));
    case Op::Pow:
      return mul(mul(constant(Rational(e->exponent)), pow(e->lhs, e->exponent - 1)), derivative(e->lhs));
    case Op::Exp: return mul(e, derivative(e->lhs));
    case Op::Ln: return div(derivative(e->lhs), e->lhs);
    case Op::Sin: return mul(apply(Op::Cos, e->lhs), derivative(e->lhs));
    case Op::Cos: return neg(mul(apply(Op::Sin, e->lhs), derivative(e->lhs)));
  }
  throw Error("unreachable expression node");
}

ExprPtr substitute(const ExprPtr& e, const ExprPtr& inner) {
  switch (e->op) {
    case Op::Const: return e;
    case Op::Var: return inner;
    case Op::Neg: return neg(substitute(e->lhs, inner));
    case Op::Add: return add(substitute(e->lhs, inner), substitute(e->rhs, inner));
    case Op::Sub: return sub(substitute(e->lhs, inner), substitute(e->rhs, inner));
    case Op::Mul: return mul(substitute(e->lhs, inner), substitute(e->rhs, inner));
    case Op::Div: return div(substitute(e->lhs, inner), substitute(e->rhs, inner));
    case Op::Pow: return pow(substitute(e->lhs, inner), e->exponent);
    default: return apply(e->op, substitute(e->lhs, inner));
  }
}

std::string to_string(const ExprPtr& e) {
  switch (e->op) {
    case Op::Const: {
      const Rational& v = e->value;
      std::string body = v.get_den() == 1 ? abs(v).get_num().get_str() : abs(v).get_str();
      if (v < 0) return "(-" + body + ")";
      return v.get_den() == 1 ? body : "(" + body + ")";
    }
    case Op::Var: return "x";
    case Op::Neg: return "(-" + to_string(e->lhs) + ")";
    case Op::Add: return "(" + to_string(e->lhs) + " + " + to_string(e->rhs) + ")";
    case Op::Sub: return "(" + to_string(e->lhs) + " - " + to_string(e->rhs) + ")";
    case Op::Mul: return "(" + to_string(e->lhs) + "*" + to_string(e->rhs) + ")";
    case Op::Div: return "(" + to_string(e->lhs) + "/" + to_string(e->rhs) + ")";
    case Op::Pow:
      return "(" + to_string(e->lhs) + ")^" + (e->exponent < 0 ? "(" + std::to_string(e->exponent) + ")"
                                                                 : std::to_string(e->exponent));
    default: return std::string(function_name(e->op)) + "(" + to_string(e->lhs) + ")";
  }
}

}  // namespace expr

FunctionSpec::FunctionSpec(ExprPtr e) : expr_(std::move(e)), deriv_(expr::derivative(expr_)) {}

FunctionSpec FunctionSpec::compose(const ExprPtr& inner) const {
  return FunctionSpec(expr::substitute(expr_, inner));
}

}  // namespace zeroheavy
