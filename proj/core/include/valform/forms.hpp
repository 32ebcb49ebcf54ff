#pragma once

// Rational top differential forms f * dg_1 ^ ... ^ dg_n on Q(x_1, ..., x_n).
//
// A form is stored with an explicit basis; two forms are the same element of
// the top exterior power when their coordinate coefficients f * det(dg/dx)
// agree. The log valuation of a form at a monomial place is
//
//     nu(omega) = nu(f_coord) + nu(x_1) + ... + nu(x_n),
//
// computed through the coordinate presentation. For adapted coordinates this
// equals nu(f) + nu(t_1) + ... + nu(t_k) for a presentation f dt ^ dx, and
// exceeds the classical divisorial order of a form by exactly one.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "valform/funfield.hpp"
#include "valform/ordgroup.hpp"
#include "valform/valuation.hpp"

namespace valform {

class TopForm {
 public:
  /// Throws SizeMismatch unless |basis| = n, DegenerateBasis when det(dg/dx) = 0.
  TopForm(RationalFunction coefficient, std::vector<RationalFunction> basis);
  /// f * dx_1 ^ ... ^ dx_n.
  static TopForm coordinate(RationalFunction coefficient);

  const VariableContext& context() const noexcept { return coefficient_.context(); }
  const RationalFunction& coefficient() const noexcept { return coefficient_; }
  const std::vector<RationalFunction>& basis() const noexcept { return basis_; }
  /// Coefficient of the form in the presentation f_coord * dx_1 ^ ... ^ dx_n.
  const RationalFunction& coordinate_coefficient() const noexcept { return coordinate_coefficient_; }

  /// Same element of the top exterior power.
  friend bool operator==(const TopForm& a, const TopForm& b);

 private:
  RationalFunction coefficient_;
  std::vector<RationalFunction> basis_;
  RationalFunction coordinate_coefficient_;
};

/// A top form over the residue field of a valuation (its context is the
/// residue context; for zero-dimensional residue fields it is a constant).
using ResidueForm = TopForm;

RationalFunction to_coordinate_coefficient(const TopForm& omega);
TopForm change_presentation(const TopForm& omega, std::vector<RationalFunction> new_basis);

/// g * omega, same basis.
TopForm scale_form(const RationalFunction& g, const TopForm& omega);

/// Log valuation of a top form. For quasi-monomial handles this assumes the
/// residues of x_i / x_j needed by the coordinate formula are generic enough to
/// form a transcendence basis; adapted specs need no assumption.
GroupElement valuate_form(const TopForm& omega, const ValuationSpec& nu);

/// Generalized Poincare residue in the canonical adapted presentation
/// dt_1 ^ ... ^ dt_k ^ dx_R of the spec's coordinates.
ResidueForm poincare_residue(const TopForm& omega, const ValuationSpec& nu);

/// Poincare residue in the form's own presentation, which must be adapted: the
/// first k basis entries have Q-independent values spanning the value group and
/// the remaining ones have value zero. Throws NonAdaptedPresentation otherwise.
ResidueForm poincare_residue_presented(const TopForm& omega, const ValuationSpec& nu);

/// Order of vanishing of f along {var = 0}: minimal exponent in the numerator
/// minus minimal exponent in the denominator.
Rational order_along(const RationalFunction& f, std::size_t var);

/// Classical divisorial order of omega: pull back through the chart
/// (x -> chart[x], living in chart_ctx) and take the order along exc_var of the
/// pulled-back coordinate coefficient. Birationality of the chart is the caller's
/// responsibility.
Rational classical_value_via_chart(const TopForm& omega, const std::map<std::string, RationalFunction>& chart,
                                   const VariableContext& chart_ctx, std::string_view exc_var);

/// "COEFF d(g1) ^ d(g2) ^ ..."
std::string to_string(const TopForm& omega);

}  // namespace valform
