#pragma once

// Expression and form literals for the command line.
//
//   expr     := term (('+' | '-') term)*
//   term     := unary (('*' | '/') unary)*
//   unary    := ('-' | '+') unary | power
//   power    := primary ('^' exponent)?
//   exponent := INT | '(' ['-' | '+'] INT ['/' INT] ')'
//   primary  := INT | IDENT | '(' expr ')'
//   form     := [expr] 'd' '(' expr ')' ('^' 'd' '(' expr ')')*
//
// so '^' binds tighter than unary minus, which binds tighter than '*' and '/'.

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "valform/forms.hpp"
#include "valform/funfield.hpp"
#include "valform/rational.hpp"

namespace valform::cli {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { Number, Variable, Negate, Add, Sub, Mul, Div, Pow };

  Kind kind = Kind::Number;
  Rational number;    // Number
  std::string name;   // Variable
  ExprPtr lhs;        // unary operand / left operand / power base
  ExprPtr rhs;        // right operand
  Rational exponent;  // Pow

  static ExprPtr make_number(const Rational& q);
  static ExprPtr make_variable(std::string name);
  static ExprPtr make_unary(Kind kind, ExprPtr operand);
  static ExprPtr make_binary(Kind kind, ExprPtr lhs, ExprPtr rhs);
  static ExprPtr make_pow(ExprPtr base, const Rational& exponent);
};

/// Throws Error{"cli", SyntaxError} with "line L, column C" in the message, and
/// Error{"cli", UnknownVariable} for identifiers outside `ctx` (when given).
ExprPtr parse_expression(std::string_view text, const VariableContext* ctx = nullptr);

std::string pretty_print(const Expr& e);
bool structurally_equal(const Expr& a, const Expr& b);

RationalFunction evaluate(const Expr& e, const VariableContext& ctx);

struct ParsedForm {
  ExprPtr coefficient;
  std::vector<ExprPtr> differentials;
};

ParsedForm parse_form(std::string_view text, const VariableContext* ctx = nullptr);
TopForm evaluate_form(const ParsedForm& form, const VariableContext& ctx);

}  // namespace valform::cli
