#include "valform/forms.hpp"

#include "valform/errors.hpp"
#include "valform/linalg.hpp"

namespace valform {

namespace {

constexpr const char* kModule = "forms";

std::vector<RationalFunction> coordinate_basis(const VariableContext& ctx) {
  std::vector<RationalFunction> basis;
  basis.reserve(ctx.size());
  for (std::size_t i = 0; i < ctx.size(); ++i) basis.push_back(RationalFunction::variable(ctx, i));
  return basis;
}

RationalFunction checked_jacobian(std::span<const RationalFunction> basis, const VariableContext& ctx) {
  RationalFunction jac = jacobian_det(basis, ctx);
  if (jac.is_zero()) throw Error(kModule, ErrorCode::DegenerateBasis, "basis functions are functionally dependent");
  return jac;
}

RationalFunction product(const std::vector<RationalFunction>& fs, std::size_t begin, std::size_t end,
                         const VariableContext& ctx) {
  RationalFunction p = RationalFunction::constant(ctx, 1);
  for (std::size_t i = begin; i < end; ++i) p = p * fs[i];
  return p;
}

}  // namespace

TopForm::TopForm(RationalFunction coefficient, std::vector<RationalFunction> basis)
    : coefficient_(std::move(coefficient)),
      basis_(std::move(basis)),
      coordinate_coefficient_(coefficient_) {
  const VariableContext& ctx = coefficient_.context();
  if (basis_.size() != ctx.size())
    throw Error(kModule, ErrorCode::SizeMismatch,
                std::to_string(basis_.size()) + " basis functions for " + std::to_string(ctx.size()) + " variables");
  coordinate_coefficient_ = coefficient_ * checked_jacobian(basis_, ctx);
}

TopForm TopForm::coordinate(RationalFunction coefficient) {
  auto basis = coordinate_basis(coefficient.context());
  return TopForm(std::move(coefficient), std::move(basis));
}

bool operator==(const TopForm& a, const TopForm& b) {
  return a.coordinate_coefficient_ == b.coordinate_coefficient_;
}

RationalFunction to_coordinate_coefficient(const TopForm& omega) { return omega.coordinate_coefficient(); }

TopForm change_presentation(const TopForm& omega, std::vector<RationalFunction> new_basis) {
  if (new_basis.size() != omega.context().size())
    throw Error(kModule, ErrorCode::SizeMismatch, "new basis has the wrong length");
  const RationalFunction jac = checked_jacobian(new_basis, omega.context());
  return TopForm(omega.coordinate_coefficient() / jac, std::move(new_basis));
}

TopForm scale_form(const RationalFunction& g, const TopForm& omega) {
  return TopForm(g * omega.coefficient(), omega.basis());
}

GroupElement valuate_form(const TopForm& omega, const ValuationSpec& nu) {
  if (!(omega.context() == nu.context()))
    throw Error(kModule, ErrorCode::ContextMismatch, "form and valuation live in different contexts");
  GroupElement v = value(nu, omega.coordinate_coefficient());
  for (const auto& w : nu.weights()) v += w;
  return v;
}

ResidueForm poincare_residue(const TopForm& omega, const ValuationSpec& nu) {
  if (!nu.is_adapted())
    throw Error(kModule, ErrorCode::NonAdaptedWeights, "Poincare residue needs adapted coordinates");
  const VariableContext& ctx = omega.context();
  std::vector<RationalFunction> adapted;
  for (auto i : nu.basis()) adapted.push_back(RationalFunction::variable(ctx, i));
  for (auto i : nu.residue_vars()) adapted.push_back(RationalFunction::variable(ctx, i));
  return poincare_residue_presented(change_presentation(omega, std::move(adapted)), nu);
}

ResidueForm poincare_residue_presented(const TopForm& omega, const ValuationSpec& nu) {
  if (!nu.is_adapted())
    throw Error(kModule, ErrorCode::NonAdaptedWeights, "Poincare residue needs adapted coordinates");
  const GroupElement v = valuate_form(omega, nu);
  if (!v.is_zero()) throw Error(kModule, ErrorCode::NonzeroFormValue, "form has value " + to_string(v));

  const std::size_t k = nu.basis().size();
  const auto& basis = omega.basis();
  std::vector<GroupElement> leading;
  for (std::size_t i = 0; i < k; ++i) {
    if (basis[i].is_zero()) throw Error(kModule, ErrorCode::NonAdaptedPresentation, "zero basis function");
    leading.push_back(value(nu, basis[i]));
  }
  if (linalg::rank(leading) != nu.group_dim())
    throw Error(kModule, ErrorCode::NonAdaptedPresentation,
                "the first " + std::to_string(k) + " basis entries must have independent values");

  std::vector<RationalFunction> residue_basis;
  for (std::size_t i = k; i < basis.size(); ++i) {
    if (basis[i].is_zero() || !value(nu, basis[i]).is_zero())
      throw Error(kModule, ErrorCode::NonAdaptedPresentation,
                  "trailing basis entry '" + to_string(basis[i]) + "' is not a unit");
    residue_basis.push_back(residue(nu, basis[i]));
  }
  const RationalFunction coeff = residue(nu, omega.coefficient() * product(basis, 0, k, omega.context()));
  try {
    return TopForm(coeff, std::move(residue_basis));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DegenerateBasis) throw;
    throw Error(kModule, ErrorCode::NonAdaptedPresentation, "residues of the trailing basis are dependent");
  }
}

Rational order_along(const RationalFunction& f, std::size_t var) {
  if (f.is_zero()) throw Error(kModule, ErrorCode::ZeroFunction, "order of the zero function");
  return f.numerator().min_exponent(var) - f.denominator().min_exponent(var);
}

Rational classical_value_via_chart(const TopForm& omega, const std::map<std::string, RationalFunction>& chart,
                                   const VariableContext& chart_ctx, std::string_view exc_var) {
  const VariableContext& ctx = omega.context();
  std::vector<RationalFunction> images;
  images.reserve(ctx.size());
  for (const auto& name : ctx.names()) {
    auto it = chart.find(name);
    if (it == chart.end()) throw Error(kModule, ErrorCode::MissingImage, "chart has no image for '" + name + "'");
    images.push_back(it->second);
  }
  const RationalFunction chart_jac = jacobian_det(images, chart_ctx);
  if (chart_jac.is_zero()) throw Error(kModule, ErrorCode::DegenerateBasis, "chart Jacobian vanishes");
  const RationalFunction pulled = substitute(omega.coordinate_coefficient(), chart, chart_ctx) * chart_jac;
  return order_along(pulled, chart_ctx.require_index(exc_var));
}

std::string to_string(const TopForm& omega) {
  std::string out = "(" + to_string(omega.coefficient()) + ")";
  for (std::size_t i = 0; i < omega.basis().size(); ++i) {
    out += i == 0 ? " " : " ^ ";
    out += "d(" + to_string(omega.basis()[i]) + ")";
  }
  return out;
}

}  // namespace valform
