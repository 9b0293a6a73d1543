#include <cctype>
#include <string>

#include "zeroheavy/errors.hpp"
#include "zeroheavy/expr.hpp"

namespace zeroheavy {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprPtr run() {
    ExprPtr e = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) {
      char c = text_[pos_];
      if (c == '%' || c == '!' || c == '&' || c == '|' || c == '<' || c == '>' || c == '=')
        throw ParseError(std::string("unsupported operator '") + c + "'", pos_);
      throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
  }

  ExprPtr parse_expr() {
    ExprPtr e = parse_term();
    while (true) {
      if (accept('+')) e = expr::add(e, parse_term());
      else if (accept('-')) e = expr::sub(e, parse_term());
      else return e;
    }
  }

  ExprPtr parse_term() {
    ExprPtr e = parse_factor();
    while (true) {
      if (accept('*')) {
        e = expr::mul(e, parse_factor());
      } else if (accept('/')) {
        std::size_t at = pos_;
        ExprPtr d = parse_factor();
        if (d->op == Op::Const && d->value == 0) throw ParseError("division by zero", at);
        e = expr::div(e, d);
      } else {
        return e;
      }
    }
  }

  ExprPtr parse_factor() {
    ExprPtr b = parse_base();
    if (accept('^')) {
      skip_ws();
      bool paren = accept('(');
      skip_ws();
      bool negative = accept('-');
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) throw ParseError("expected integer exponent", pos_);
      std::string digits(text_.substr(start, pos_ - start));
      if (digits.size() > 9) throw ParseError("exponent too large", start);
      long n = std::stol(digits);
      if (paren) expect(')');
      if (negative) {
        if (b->op == Op::Const && b->value == 0) throw ParseError("negative power of zero", start);
        n = -n;
      }
      b = expr::pow(b, n);
    }
    return b;
  }

  ExprPtr parse_number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E') && pos_ + 1 < text_.size() &&
        (std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])) || text_[pos_ + 1] == '-' || text_[pos_ + 1] == '+'))
      throw ParseError("floating-point exponent notation is not accepted", pos_);
    return expr::constant(parse_rational(text_.substr(start, pos_ - start)));
  }

  ExprPtr parse_base() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (c == '(') {
      ++pos_;
      ExprPtr e = parse_expr();
      expect(')');
      return e;
    }
    if (c == '-') {
      ++pos_;
      return expr::neg(parse_factor());
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (name == "x") return expr::variable();
      Op fn;
      if (name == "exp") fn = Op::Exp;
      else if (name == "ln") fn = Op::Ln;
      else if (name == "sin") fn = Op::Sin;
      else if (name == "cos") fn = Op::Cos;
      else throw ParseError("unsupported function or symbol '" + name + "'", start);
      expect('(');
      ExprPtr arg = parse_expr();
      expect(')');
      if (fn == Op::Ln && arg->op == Op::Const && arg->value <= 0)
        throw ParseError("ln of non-positive constant", start);
      return expr::apply(fn, arg);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

FunctionSpec parse(std::string_view text) {
  try {
    return FunctionSpec(Parser(text).run());
  } catch (const ParseError&) {
    throw;
  } catch (const DomainError& e) {
    throw ParseError(e.what(), 0);
  }
}

}  // namespace zeroheavy
