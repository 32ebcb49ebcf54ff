#pragma once

// Monomial-type Abhyankar valuations on Q(x_1, ..., x_n).
//
// A valuation is given by a weight w(x_i) in lex Q^d for every coordinate; a
// polynomial is valued by the lex-minimum of its term values. An *adapted*
// spec additionally partitions the coordinates into basis variables T, whose
// weights form a Q-basis of Q^d, and residue variables R of weight zero whose
// residues form a transcendence basis of the residue field. Quasi-monomial
// handles allow arbitrary (dependent) weights and only support values.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "valform/funfield.hpp"
#include "valform/ordgroup.hpp"

namespace valform {

struct ValuationInvariants {
  std::size_t rank = 0;
  std::size_t rational_rank = 0;
  std::size_t dimension = 0;
  friend bool operator==(const ValuationInvariants&, const ValuationInvariants&) = default;
};

class ValuationSpec {
 public:
  /// Adapted spec: basis = variables of nonzero weight, residue = the rest.
  /// Throws NonAdaptedWeights unless the nonzero weights form a basis of Q^d.
  static ValuationSpec monomial(VariableContext ctx, std::vector<GroupElement> weights);
  /// Adapted spec with an explicitly declared basis/residue partition (order is kept).
  static ValuationSpec monomial(VariableContext ctx, std::vector<GroupElement> weights,
                                const std::vector<std::string>& basis, const std::vector<std::string>& residue);
  /// Handle with arbitrary weights; supports values and form values but not residues.
  static ValuationSpec quasi_monomial(VariableContext ctx, std::vector<GroupElement> weights);
  /// outer composed with inner, where inner lives on the residue field of outer.
  static ValuationSpec compose(const ValuationSpec& outer, const ValuationSpec& inner);

  const VariableContext& context() const noexcept { return ctx_; }
  OrderedGroupSpec group() const noexcept { return {dim_}; }
  std::size_t group_dim() const noexcept { return dim_; }
  const std::vector<GroupElement>& weights() const noexcept { return weights_; }
  const GroupElement& weight(std::size_t index) const { return weights_.at(index); }

  bool is_adapted() const noexcept { return adapted_; }
  /// Basis and residue variables (indices into context()); throw NonAdaptedWeights for handles.
  const std::vector<std::size_t>& basis() const;
  const std::vector<std::size_t>& residue_vars() const;
  /// The context of the residue field (names of the residue variables, in order).
  const VariableContext& residue_context() const;

  bool is_composed() const noexcept { return composition_ != nullptr; }
  const CompositionLayout& layout() const;
  const ValuationSpec& outer() const;
  const ValuationSpec& inner() const;

 private:
  struct Composition;

  ValuationSpec() = default;
  void set_partition(std::vector<std::size_t> basis, std::vector<std::size_t> residue);

  VariableContext ctx_;
  std::size_t dim_ = 0;
  std::vector<GroupElement> weights_;
  bool adapted_ = false;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> residue_;
  VariableContext residue_ctx_;
  std::shared_ptr<const Composition> composition_;
};

/// Converts a name -> weight map to per-variable weights; absent variables get weight zero.
std::vector<GroupElement> weights_from_map(const VariableContext& ctx,
                                           const std::map<std::string, GroupElement>& weights);

GroupElement term_value(const ValuationSpec& nu, const Monomial& m);
GroupElement value_poly(const ValuationSpec& nu, const Polynomial& p);
GroupElement value(const ValuationSpec& nu, const RationalFunction& f);
Polynomial initial_form(const ValuationSpec& nu, const Polynomial& p);
/// Image of a value-zero function in the residue field Q(residue vars).
RationalFunction residue(const ValuationSpec& nu, const RationalFunction& f);
/// (outer value, inner value of the normalized residue) for a composed spec.
std::pair<GroupElement, GroupElement> split_value(const ValuationSpec& composed, const RationalFunction& f);
ValuationInvariants invariants_of(const ValuationSpec& nu);

}  // namespace valform
