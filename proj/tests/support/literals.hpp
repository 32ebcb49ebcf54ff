#pragma once

#include <stdexcept>
#include <string_view>

#include "cli/expression.hpp"
#include "valform/forms.hpp"
#include "valform/funfield.hpp"

namespace valform::testing {

inline RationalFunction fn(const VariableContext& ctx, std::string_view text) {
  return cli::evaluate(*cli::parse_expression(text, &ctx), ctx);
}

inline Polynomial poly(const VariableContext& ctx, std::string_view text) {
  const RationalFunction f = fn(ctx, text);
  if (!f.denominator().is_constant()) throw std::logic_error("not a polynomial literal");
  return f.numerator().scaled(1 / f.denominator().coefficient(Monomial()));
}

inline TopForm form(const VariableContext& ctx, std::string_view text) {
  return cli::evaluate_form(cli::parse_form(text, &ctx), ctx);
}

}  // namespace valform::testing
