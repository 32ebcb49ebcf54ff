#pragma once

// Sparse exact arithmetic in Q(x_1, ..., x_n), with rational exponents.
//
// Polynomials may carry negative or fractional exponents (Laurent/Puiseux
// monomials); fractional exponents follow the additive law and are otherwise
// treated formally. Rational functions are unreduced numerator/denominator
// pairs compared by cross-multiplication; no gcd is ever computed.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "valform/rational.hpp"

namespace valform {

/// Ordered list of variable names; the transcendence basis of the function field.
/// Copies share the name list. An empty context models the constants Q.
class VariableContext {
 public:
  VariableContext();
  explicit VariableContext(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_->size(); }
  bool empty() const noexcept { return names_->empty(); }
  const std::string& name(std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const noexcept { return *names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  /// Throws UnknownVariable.
  std::size_t require_index(std::string_view name) const;

  friend bool operator==(const VariableContext& a, const VariableContext& b);

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

/// Product of powers of variables, stored sparsely by variable index. No zero exponents.
class Monomial {
 public:
  using Factor = std::pair<std::size_t, Rational>;

  Monomial() = default;
  static Monomial variable(std::size_t index, const Rational& exponent = 1);

  const std::vector<Factor>& factors() const noexcept { return factors_; }
  Rational exponent(std::size_t index) const;
  bool is_one() const noexcept { return factors_.empty(); }
  bool has_fractional_exponent() const;

  Monomial operator*(const Monomial& other) const;
  Monomial pow(const Rational& e) const;
  /// Drops the given variables.
  Monomial without(std::span<const std::size_t> indices) const;
  /// Keeps only the given variables.
  Monomial restricted_to(std::span<const std::size_t> indices) const;

  friend bool operator==(const Monomial& a, const Monomial& b);

 private:
  std::vector<Factor> factors_;  // sorted by index
};

/// Term order used for storage and printing: lexicographic with x_0 > x_1 > ...,
/// larger exponents first.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational, MonomialOrder>;

  explicit Polynomial(VariableContext ctx) : ctx_(std::move(ctx)) {}
  Polynomial(VariableContext ctx, Terms terms);

  static Polynomial constant(const VariableContext& ctx, const Rational& c);
  static Polynomial variable(const VariableContext& ctx, std::size_t index);
  static Polynomial variable(const VariableContext& ctx, std::string_view name);
  static Polynomial term(const VariableContext& ctx, const Monomial& m, const Rational& c);

  const VariableContext& context() const noexcept { return ctx_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  bool is_single_term() const noexcept { return terms_.size() == 1; }
  Rational coefficient(const Monomial& m) const;
  /// Smallest exponent of a variable over all terms (0 for the zero polynomial).
  Rational min_exponent(std::size_t index) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial operator-() const;
  Polynomial scaled(const Rational& c) const;
  Polynomial times(const Monomial& m, const Rational& c = 1) const;
  Polynomial pow(unsigned long e) const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void add_term(const Monomial& m, const Rational& c);

  VariableContext ctx_;
  Terms terms_;
};

Polynomial poly_add(const Polynomial& p, const Polynomial& q);
Polynomial poly_mul(const Polynomial& p, const Polynomial& q);
Polynomial poly_neg(const Polynomial& p);
Polynomial partial(const Polynomial& p, std::size_t index);

class RationalFunction {
 public:
  explicit RationalFunction(Polynomial numerator);
  /// Throws DivisionByZero for a zero denominator.
  RationalFunction(Polynomial numerator, Polynomial denominator);

  static RationalFunction constant(const VariableContext& ctx, const Rational& c);
  static RationalFunction variable(const VariableContext& ctx, std::size_t index);
  static RationalFunction variable(const VariableContext& ctx, std::string_view name);

  const Polynomial& numerator() const noexcept { return num_; }
  const Polynomial& denominator() const noexcept { return den_; }
  const VariableContext& context() const noexcept { return num_.context(); }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const;

  RationalFunction operator-() const;
  RationalFunction inverse() const;
  /// Integer powers always; fractional powers only of a single monomial term.
  RationalFunction pow(const Rational& e) const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  /// Equality as elements of the function field (cross-multiplication).
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);

 private:
  void normalize();

  Polynomial num_;
  Polynomial den_;
};

RationalFunction rf_add(const RationalFunction& f, const RationalFunction& g);
RationalFunction rf_mul(const RationalFunction& f, const RationalFunction& g);
RationalFunction rf_div(const RationalFunction& f, const RationalFunction& g);
RationalFunction rf_inv(const RationalFunction& f);

RationalFunction partial(const RationalFunction& f, std::size_t index);
RationalFunction partial(const RationalFunction& f, std::string_view variable);

/// det(d f_i / d x_j) for the n variables of ctx.
RationalFunction jacobian_det(std::span<const RationalFunction> fs, const VariableContext& ctx);

/// Simultaneous substitution x -> images[x]; all images live in `target`.
RationalFunction substitute(const RationalFunction& f, const std::map<std::string, RationalFunction>& images,
                            const VariableContext& target);

/// Re-expresses p in another context that contains all of its variables.
Polynomial rebase(const Polynomial& p, const VariableContext& target);
RationalFunction rebase(const RationalFunction& f, const VariableContext& target);

std::string to_string(const Monomial& m, const VariableContext& ctx);
std::string to_string(const Polynomial& p);
std::string to_string(const RationalFunction& f);

}  // namespace valform
