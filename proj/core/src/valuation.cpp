#include "valform/valuation.hpp"

#include <algorithm>
#include <set>

#include "valform/errors.hpp"
#include "valform/linalg.hpp"

namespace valform {

namespace {

constexpr const char* kModule = "valuation";

std::size_t common_dim(const std::vector<GroupElement>& weights) {
  if (weights.empty()) throw Error(kModule, ErrorCode::SizeMismatch, "no weights");
  const std::size_t d = weights.front().dim();
  for (const auto& w : weights)
    if (w.dim() != d) throw Error(kModule, ErrorCode::DimensionMismatch, "weights of different dimensions");
  if (d == 0) throw Error(kModule, ErrorCode::DimensionMismatch, "value group must have positive dimension");
  return d;
}

VariableContext sub_context(const VariableContext& ctx, const std::vector<std::size_t>& indices) {
  std::vector<std::string> names;
  names.reserve(indices.size());
  for (auto i : indices) names.push_back(ctx.name(i));
  return VariableContext(std::move(names));
}

void require_context(const ValuationSpec& nu, const VariableContext& ctx) {
  if (!(nu.context() == ctx))
    throw Error(kModule, ErrorCode::ContextMismatch, "function does not live in the valuation's context");
}

}  // namespace

struct ValuationSpec::Composition {
  CompositionLayout layout;
  ValuationSpec outer;
  ValuationSpec inner;
};

std::vector<GroupElement> weights_from_map(const VariableContext& ctx,
                                           const std::map<std::string, GroupElement>& weights) {
  if (weights.empty()) throw Error(kModule, ErrorCode::SizeMismatch, "no weights given");
  const std::size_t d = weights.begin()->second.dim();
  std::vector<GroupElement> out(ctx.size(), GroupElement::zero(d));
  for (const auto& [name, w] : weights) {
    out[ctx.require_index(name)] = w;
  }
  return out;
}

void ValuationSpec::set_partition(std::vector<std::size_t> basis, std::vector<std::size_t> residue) {
  std::vector<GroupElement> basis_weights;
  for (auto i : basis) basis_weights.push_back(weights_[i]);
  for (auto i : residue)
    if (!weights_[i].is_zero())
      throw Error(kModule, ErrorCode::NonAdaptedWeights,
                  "residue variable '" + ctx_.name(i) + "' has nonzero weight " + to_string(weights_[i]));
  if (basis.size() != dim_ || linalg::rank(basis_weights) != dim_)
    throw Error(kModule, ErrorCode::NonAdaptedWeights,
                "basis weights must form a basis of Q^" + std::to_string(dim_) + " (got " +
                    std::to_string(basis.size()) + " weights of rank " +
                    std::to_string(linalg::rank(basis_weights)) + ")");
  basis_ = std::move(basis);
  residue_ = std::move(residue);
  residue_ctx_ = sub_context(ctx_, residue_);
  adapted_ = true;
}

ValuationSpec ValuationSpec::monomial(VariableContext ctx, std::vector<GroupElement> weights) {
  if (weights.size() != ctx.size())
    throw Error(kModule, ErrorCode::SizeMismatch, "one weight per variable required");
  ValuationSpec nu;
  nu.dim_ = common_dim(weights);
  nu.ctx_ = std::move(ctx);
  nu.weights_ = std::move(weights);
  std::vector<std::size_t> basis, residue;
  for (std::size_t i = 0; i < nu.weights_.size(); ++i) (nu.weights_[i].is_zero() ? residue : basis).push_back(i);
  nu.set_partition(std::move(basis), std::move(residue));
  return nu;
}

ValuationSpec ValuationSpec::monomial(VariableContext ctx, std::vector<GroupElement> weights,
                                      const std::vector<std::string>& basis,
                                      const std::vector<std::string>& residue) {
  if (weights.size() != ctx.size())
    throw Error(kModule, ErrorCode::SizeMismatch, "one weight per variable required");
  ValuationSpec nu;
  nu.dim_ = common_dim(weights);
  nu.ctx_ = std::move(ctx);
  nu.weights_ = std::move(weights);
  std::vector<std::size_t> b, r;
  std::set<std::size_t> seen;
  for (const auto& name : basis) b.push_back(nu.ctx_.require_index(name));
  for (const auto& name : residue) r.push_back(nu.ctx_.require_index(name));
  for (auto i : b) seen.insert(i);
  for (auto i : r) seen.insert(i);
  if (seen.size() != nu.ctx_.size() || b.size() + r.size() != nu.ctx_.size())
    throw Error(kModule, ErrorCode::NonAdaptedWeights, "basis and residue must partition the variables");
  nu.set_partition(std::move(b), std::move(r));
  return nu;
}

ValuationSpec ValuationSpec::quasi_monomial(VariableContext ctx, std::vector<GroupElement> weights) {
  if (weights.size() != ctx.size())
    throw Error(kModule, ErrorCode::SizeMismatch, "one weight per variable required");
  ValuationSpec nu;
  nu.dim_ = common_dim(weights);
  nu.ctx_ = std::move(ctx);
  nu.weights_ = std::move(weights);
  return nu;
}

ValuationSpec ValuationSpec::compose(const ValuationSpec& outer, const ValuationSpec& inner) {
  if (!outer.adapted_ || !inner.adapted_)
    throw Error(kModule, ErrorCode::NonAdaptedWeights, "composition needs adapted specs on both sides");
  if (!(inner.ctx_ == outer.residue_ctx_))
    throw Error(kModule, ErrorCode::ContextMismatch, "inner valuation must live on the outer residue variables");
  const CompositionLayout layout{outer.dim_, inner.dim_};

  ValuationSpec nu;
  nu.ctx_ = outer.ctx_;
  nu.dim_ = layout.total();
  nu.weights_.assign(nu.ctx_.size(), GroupElement::zero(nu.dim_));
  for (auto i : outer.basis_) nu.weights_[i] = concat(outer.weights_[i], GroupElement::zero(inner.dim_));
  std::vector<std::size_t> basis = outer.basis_;
  std::vector<std::size_t> residue;
  for (std::size_t j = 0; j < inner.ctx_.size(); ++j) {
    const std::size_t i = outer.residue_[j];
    nu.weights_[i] = include_subgroup(layout, inner.weights_[j]);
  }
  for (auto j : inner.basis_) basis.push_back(outer.residue_[j]);
  for (auto j : inner.residue_) residue.push_back(outer.residue_[j]);
  nu.set_partition(std::move(basis), std::move(residue));
  nu.composition_ = std::make_shared<const Composition>(Composition{layout, outer, inner});
  return nu;
}

const std::vector<std::size_t>& ValuationSpec::basis() const {
  if (!adapted_) throw Error(kModule, ErrorCode::NonAdaptedWeights, "quasi-monomial handle has no basis partition");
  return basis_;
}

const std::vector<std::size_t>& ValuationSpec::residue_vars() const {
  if (!adapted_) throw Error(kModule, ErrorCode::NonAdaptedWeights, "quasi-monomial handle has no basis partition");
  return residue_;
}

const VariableContext& ValuationSpec::residue_context() const {
  if (!adapted_) throw Error(kModule, ErrorCode::NonAdaptedWeights, "quasi-monomial handle has no residue field model");
  return residue_ctx_;
}

const CompositionLayout& ValuationSpec::layout() const {
  if (!composition_) throw Error(kModule, ErrorCode::LayoutMismatch, "not a composed valuation");
  return composition_->layout;
}

const ValuationSpec& ValuationSpec::outer() const {
  if (!composition_) throw Error(kModule, ErrorCode::LayoutMismatch, "not a composed valuation");
  return composition_->outer;
}

const ValuationSpec& ValuationSpec::inner() const {
  if (!composition_) throw Error(kModule, ErrorCode::LayoutMismatch, "not a composed valuation");
  return composition_->inner;
}

GroupElement term_value(const ValuationSpec& nu, const Monomial& m) {
  GroupElement v = GroupElement::zero(nu.group_dim());
  for (const auto& [i, e] : m.factors()) v += scale(e, nu.weight(i));
  return v;
}

GroupElement value_poly(const ValuationSpec& nu, const Polynomial& p) {
  require_context(nu, p.context());
  if (p.is_zero()) throw Error(kModule, ErrorCode::ZeroPolynomial, "value of the zero polynomial");
  std::optional<GroupElement> best;
  for (const auto& [m, c] : p.terms()) {
    GroupElement v = term_value(nu, m);
    if (!best || v < *best) best = std::move(v);
  }
  return *best;
}

GroupElement value(const ValuationSpec& nu, const RationalFunction& f) {
  require_context(nu, f.context());
  if (f.is_zero()) throw Error(kModule, ErrorCode::ZeroFunction, "value of the zero function");
  return value_poly(nu, f.numerator()) - value_poly(nu, f.denominator());
}

Polynomial initial_form(const ValuationSpec& nu, const Polynomial& p) {
  const GroupElement v = value_poly(nu, p);
  Polynomial out(p.context());
  for (const auto& [m, c] : p.terms())
    if (term_value(nu, m) == v) out += Polynomial::term(p.context(), m, c);
  return out;
}

RationalFunction residue(const ValuationSpec& nu, const RationalFunction& f) {
  if (!nu.is_adapted())
    throw Error(kModule, ErrorCode::NonAdaptedWeights, "residues need adapted coordinates; rewrite the handle first");
  const GroupElement v = value(nu, f);
  if (!v.is_zero()) throw Error(kModule, ErrorCode::NonzeroValue, "residue of a function of value " + to_string(v));
  const auto& basis = nu.basis();
  // in(P) = t^a * p(x_R): every minimal term carries the same basis monomial t^a.
  auto strip = [&](const Polynomial& p) {
    Polynomial init = initial_form(nu, p);
    Polynomial out(p.context());
    for (const auto& [m, c] : init.terms()) out += Polynomial::term(p.context(), m.without(basis), c);
    return rebase(out, nu.residue_context());
  };
  return RationalFunction(strip(f.numerator()), strip(f.denominator()));
}

std::pair<GroupElement, GroupElement> split_value(const ValuationSpec& composed, const RationalFunction& f) {
  const ValuationSpec& outer = composed.outer();
  const ValuationSpec& inner = composed.inner();
  require_context(composed, f.context());
  if (f.is_zero()) throw Error(kModule, ErrorCode::ZeroFunction, "split value of the zero function");

  const GroupElement outer_value = value(outer, f);
  std::vector<GroupElement> basis_weights;
  for (auto i : outer.basis()) basis_weights.push_back(outer.weight(i));
  auto n = linalg::coordinates_in_span(basis_weights, outer_value);
  if (!n) throw Error(kModule, ErrorCode::InconsistentSpan, "outer value outside the span of the basis weights");

  // f * prod t_i^{-n_i} has outer value zero; its residue is valued by the inner spec.
  Monomial shift;
  for (std::size_t k = 0; k < outer.basis().size(); ++k) shift = shift * Monomial::variable(outer.basis()[k], -(*n)[k]);
  const RationalFunction normalized = f * RationalFunction(Polynomial::term(f.context(), shift, 1));
  const RationalFunction r = rebase(residue(outer, normalized), inner.context());
  return {outer_value, value(inner, r)};
}

ValuationInvariants invariants_of(const ValuationSpec& nu) {
  // Under lex Q^d the convex subgroups of a Q-span correspond to its pivot columns,
  // so rank and rational rank coincide in this model.
  const std::size_t rr = linalg::rank(nu.weights());
  return {rr, rr, nu.context().size() - rr};
}

}  // namespace valform
