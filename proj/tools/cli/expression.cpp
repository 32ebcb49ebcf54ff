#include "expression.hpp"

#include <cctype>
#include <optional>

#include "valform/errors.hpp"

namespace valform::cli {

ExprPtr Expr::make_number(const Rational& q) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Number;
  e->number = q;
  return e;
}

ExprPtr Expr::make_variable(std::string name) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Variable;
  e->name = std::move(name);
  return e;
}

ExprPtr Expr::make_unary(Kind kind, ExprPtr operand) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  e->lhs = std::move(operand);
  return e;
}

ExprPtr Expr::make_binary(Kind kind, ExprPtr lhs, ExprPtr rhs) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  e->lhs = std::move(lhs);
  e->rhs = std::move(rhs);
  return e;
}

ExprPtr Expr::make_pow(ExprPtr base, const Rational& exponent) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Pow;
  e->lhs = std::move(base);
  e->exponent = exponent;
  return e;
}

namespace {

struct Token {
  enum class Type { Int, Ident, Op, End };
  Type type = Type::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.column = col;
    std::size_t j = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      t.type = Token::Type::Int;
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      t.type = Token::Type::Ident;
    } else if (std::string_view("+-*/^()").find(c) != std::string_view::npos) {
      j = i + 1;
      t.type = Token::Type::Op;
    } else {
      throw Error("cli", ErrorCode::SyntaxError,
                  "line " + std::to_string(line) + ", column " + std::to_string(col) + ": unexpected character '" +
                      std::string(1, c) + "'");
    }
    t.text = std::string(src.substr(i, j - i));
    advance(j - i);
    out.push_back(std::move(t));
  }
  Token end;
  end.line = line;
  end.column = col;
  out.push_back(end);
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const VariableContext* ctx) : tokens_(tokenize(text)), ctx_(ctx) {}

  ExprPtr parse_expression_only() {
    ExprPtr e = expr();
    expect_end();
    return e;
  }

  ParsedForm parse_form() {
    ParsedForm form;
    if (at_differential())
      form.coefficient = Expr::make_number(1);
    else
      form.coefficient = expr();
    if (!at_differential()) fail(peek(), "expected d(...)");
    form.differentials.push_back(differential());
    while (peek_op("^")) {
      next();
      if (!at_differential()) fail(peek(), "expected d(...) after '^'");
      form.differentials.push_back(differential());
    }
    expect_end();
    return form;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
  bool peek_op(std::string_view op, std::size_t ahead = 0) const {
    const Token& t = peek(ahead);
    return t.type == Token::Type::Op && t.text == op;
  }

  [[noreturn]] void fail(const Token& t, const std::string& what) const {
    const std::string found = t.type == Token::Type::End ? "end of input" : "'" + t.text + "'";
    throw Error("cli", ErrorCode::SyntaxError,
                "line " + std::to_string(t.line) + ", column " + std::to_string(t.column) + ": " + what +
                    ", found " + found);
  }

  void expect_op(std::string_view op) {
    if (!peek_op(op)) fail(peek(), "expected '" + std::string(op) + "'");
    next();
  }

  void expect_end() {
    if (peek().type != Token::Type::End) fail(peek(), "unexpected trailing input");
  }

  bool at_differential() const {
    return peek().type == Token::Type::Ident && peek().text == "d" && peek_op("(", 1);
  }

  ExprPtr differential() {
    next();  // d
    expect_op("(");
    ExprPtr e = expr();
    expect_op(")");
    return e;
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    while (peek_op("+") || peek_op("-")) {
      const auto kind = next().text == "+" ? Expr::Kind::Add : Expr::Kind::Sub;
      lhs = Expr::make_binary(kind, lhs, term());
    }
    return lhs;
  }

  ExprPtr term() {
    ExprPtr lhs = unary();
    while (peek_op("*") || peek_op("/")) {
      const auto kind = next().text == "*" ? Expr::Kind::Mul : Expr::Kind::Div;
      lhs = Expr::make_binary(kind, lhs, unary());
    }
    return lhs;
  }

  ExprPtr unary() {
    if (peek_op("-")) {
      next();
      return Expr::make_unary(Expr::Kind::Negate, unary());
    }
    if (peek_op("+")) {
      next();
      return unary();
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = primary();
    if (peek_op("^")) {
      next();
      return Expr::make_pow(base, exponent());
    }
    return base;
  }

  Rational exponent() {
    if (peek().type == Token::Type::Int) return Rational(mpz_class(next().text));
    if (!peek_op("(")) fail(peek(), "exponent must be an integer or a parenthesized rational literal");
    next();
    bool negative = false;
    if (peek_op("-") || peek_op("+")) negative = next().text == "-";
    if (peek().type != Token::Type::Int) fail(peek(), "expected integer in exponent");
    mpz_class num(next().text);
    mpz_class den(1);
    if (peek_op("/")) {
      next();
      if (peek().type != Token::Type::Int) fail(peek(), "expected denominator in exponent");
      const Token& t = next();
      den = mpz_class(t.text);
      if (den == 0) fail(t, "zero denominator in exponent");
    }
    expect_op(")");
    Rational q(negative ? mpz_class(-num) : num, den);
    q.canonicalize();
    return q;
  }

  ExprPtr primary() {
    const Token& t = peek();
    switch (t.type) {
      case Token::Type::Int:
        next();
        return Expr::make_number(Rational(mpz_class(t.text)));
      case Token::Type::Ident:
        if (ctx_ && !ctx_->index_of(t.text))
          throw Error("cli", ErrorCode::UnknownVariable,
                      "line " + std::to_string(t.line) + ", column " + std::to_string(t.column) +
                          ": unknown variable '" + t.text + "'");
        next();
        return Expr::make_variable(t.text);
      case Token::Type::Op:
        if (t.text == "(") {
          next();
          ExprPtr e = expr();
          expect_op(")");
          return e;
        }
        break;
      case Token::Type::End:
        break;
    }
    fail(t, "expected a number, variable or '('");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const VariableContext* ctx_;
};

int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub: return 1;
    case Expr::Kind::Mul:
    case Expr::Kind::Div: return 2;
    case Expr::Kind::Negate: return 3;
    case Expr::Kind::Pow: return 4;
    case Expr::Kind::Number: return is_integer(e.number) && e.number >= 0 ? 5 : 2;
    case Expr::Kind::Variable: return 5;
  }
  return 0;
}

std::string print_at(const Expr& e, int min_prec) {
  std::string s = pretty_print(e);
  return precedence(e) < min_prec ? "(" + s + ")" : s;
}

}  // namespace

ExprPtr parse_expression(std::string_view text, const VariableContext* ctx) {
  return Parser(text, ctx).parse_expression_only();
}

ParsedForm parse_form(std::string_view text, const VariableContext* ctx) { return Parser(text, ctx).parse_form(); }

std::string pretty_print(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Number:
      if (e.number < 0) return "-" + to_string(Rational(-e.number));
      return to_string(e.number);
    case Expr::Kind::Variable: return e.name;
    case Expr::Kind::Negate: return "-" + print_at(*e.lhs, 3);
    case Expr::Kind::Add: return print_at(*e.lhs, 1) + " + " + print_at(*e.rhs, 2);
    case Expr::Kind::Sub: return print_at(*e.lhs, 1) + " - " + print_at(*e.rhs, 2);
    case Expr::Kind::Mul: return print_at(*e.lhs, 2) + "*" + print_at(*e.rhs, 3);
    case Expr::Kind::Div: return print_at(*e.lhs, 2) + "/" + print_at(*e.rhs, 3);
    case Expr::Kind::Pow: {
      std::string exp = is_integer(e.exponent) && e.exponent >= 0 ? to_string(e.exponent)
                                                                   : "(" + to_string(e.exponent) + ")";
      return print_at(*e.lhs, 5) + "^" + exp;
    }
  }
  return {};
}

bool structurally_equal(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Expr::Kind::Number: return a.number == b.number;
    case Expr::Kind::Variable: return a.name == b.name;
    case Expr::Kind::Negate: return structurally_equal(*a.lhs, *b.lhs);
    case Expr::Kind::Pow: return a.exponent == b.exponent && structurally_equal(*a.lhs, *b.lhs);
    default: return structurally_equal(*a.lhs, *b.lhs) && structurally_equal(*a.rhs, *b.rhs);
  }
}

RationalFunction evaluate(const Expr& e, const VariableContext& ctx) {
  switch (e.kind) {
    case Expr::Kind::Number: return RationalFunction::constant(ctx, e.number);
    case Expr::Kind::Variable: return RationalFunction::variable(ctx, e.name);
    case Expr::Kind::Negate: return -evaluate(*e.lhs, ctx);
    case Expr::Kind::Add: return evaluate(*e.lhs, ctx) + evaluate(*e.rhs, ctx);
    case Expr::Kind::Sub: return evaluate(*e.lhs, ctx) - evaluate(*e.rhs, ctx);
    case Expr::Kind::Mul: return evaluate(*e.lhs, ctx) * evaluate(*e.rhs, ctx);
    case Expr::Kind::Div: return evaluate(*e.lhs, ctx) / evaluate(*e.rhs, ctx);
    case Expr::Kind::Pow: return evaluate(*e.lhs, ctx).pow(e.exponent);
  }
  return RationalFunction::constant(ctx, 0);
}

TopForm evaluate_form(const ParsedForm& form, const VariableContext& ctx) {
  std::vector<RationalFunction> basis;
  for (const auto& d : form.differentials) basis.push_back(evaluate(*d, ctx));
  return TopForm(evaluate(*form.coefficient, ctx), std::move(basis));
}

}  // namespace valform::cli
