#pragma once

// Finite-support generalized power/Laurent series sum a_g z^g with exponents in
// lex Q^d. Infinite well-ordered supports only appear as truncations, which
// carry an explicit marker recording how far the emitted terms are exact.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "valform/funfield.hpp"
#include "valform/ordgroup.hpp"
#include "valform/valuation.hpp"

namespace valform {

/// Incompleteness record. `precision`, when known, is an exponent such that every
/// coefficient strictly below it (and not above `cutoff`, if set) is exact; terms
/// at or above it may be missing.
struct Truncation {
  std::size_t max_terms = 0;
  std::optional<GroupElement> cutoff;
  std::optional<GroupElement> precision;
  friend bool operator==(const Truncation&, const Truncation&) = default;
};

class GenSeries {
 public:
  using Support = std::map<GroupElement, Rational>;

  explicit GenSeries(OrderedGroupSpec group) : group_(group) {}
  GenSeries(OrderedGroupSpec group, Support terms, std::optional<Truncation> truncation = std::nullopt);

  static GenSeries monomial(OrderedGroupSpec group, const GroupElement& exponent, const Rational& coefficient = 1);
  static GenSeries constant(OrderedGroupSpec group, const Rational& c);

  OrderedGroupSpec group() const noexcept { return group_; }
  const Support& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_exact() const noexcept { return !truncation_.has_value(); }
  const std::optional<Truncation>& truncation() const noexcept { return truncation_; }
  Rational coefficient(const GroupElement& exponent) const;

  /// Equality of supports and coefficients; truncation markers are compared too.
  friend bool operator==(const GenSeries& a, const GenSeries& b);

 private:
  friend GenSeries series_add(const GenSeries& s, const GenSeries& t);
  friend GenSeries series_mul(const GenSeries& s, const GenSeries& t);

  OrderedGroupSpec group_;
  Support terms_;
  std::optional<Truncation> truncation_;
};

/// Each term c * x^q goes to c * z^(sum_j q_j w(x_j)); colliding exponents add up.
GenSeries series_from_poly(const Polynomial& p, const std::vector<GroupElement>& weights);
GenSeries series_from_poly(const Polynomial& p, const ValuationSpec& nu);

GenSeries series_add(const GenSeries& s, const GenSeries& t);
GenSeries series_neg(const GenSeries& s);
GenSeries series_sub(const GenSeries& s, const GenSeries& t);
GenSeries series_mul(const GenSeries& s, const GenSeries& t);

inline GenSeries operator+(const GenSeries& s, const GenSeries& t) { return series_add(s, t); }
inline GenSeries operator-(const GenSeries& s, const GenSeries& t) { return series_sub(s, t); }
inline GenSeries operator*(const GenSeries& s, const GenSeries& t) { return series_mul(s, t); }

struct InversePolicy {
  std::size_t max_terms = 8;
  std::optional<GroupElement> cutoff;
  /// Upper bound on the number of geometric-series rounds.
  std::size_t max_rounds = 512;
};

/// Writes s = c z^v (1 + m) with m > 0 and expands c^-1 z^-v sum_k (-m)^k. Only
/// exact terms are emitted: s * result agrees with 1 strictly below the recorded
/// precision (and up to the cutoff). A monomial inverts exactly without a marker.
GenSeries series_invert(const GenSeries& s, const InversePolicy& policy = {});

GroupElement series_value(const GenSeries& s);

/// Names z_i = z^(e_i) for the coordinate directions of Q^d.
struct SeriesVariableFrame {
  std::vector<std::string> names;
  std::size_t dim() const noexcept { return names.size(); }
};

SeriesVariableFrame default_frame(std::size_t dim);

/// Term-wise d/dz_i: a z^g -> a g_i z^(g - e_i).
GenSeries formal_partial(const GenSeries& s, const SeriesVariableFrame& frame, std::size_t i);

/// Keeps the terms whose front coordinates vanish, projected to the back
/// subgroup. Throws NotInValuationRing if some term has negative front part.
GenSeries series_residue(const GenSeries& s, const CompositionLayout& layout);

/// nu(f dz_1 ^ ... ^ dz_n) = nu(f) + g_1 + ... + g_n.
GroupElement series_form_value(const GenSeries& f, const std::vector<GroupElement>& basis_values);

/// "[(0, 0): 1, (1, 0): -1]"
std::string to_string(const GenSeries& s);
/// Parses the literal above; `dim` is required only for the empty literal "[]".
GenSeries parse_series(std::string_view text, std::optional<std::size_t> dim = std::nullopt);

}  // namespace valform
