#pragma once

// Totally ordered value groups realized as Q^d under the lexicographic order.
//
// Every value group this library produces is finitely generated, so it sits
// inside some Q^d. Rank-one groups generated by Q-independent reals are
// modelled by lex Q^d of the same rational rank: the order type changes but
// every comparison between finitely many exactly known values is still decided
// consistently with the group structure.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "valform/rational.hpp"

namespace valform {

class GroupElement {
 public:
  GroupElement() = default;
  explicit GroupElement(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  GroupElement(std::initializer_list<Rational> coords) : coords_(coords) {}

  static GroupElement zero(std::size_t dim) { return GroupElement(std::vector<Rational>(dim)); }
  static GroupElement unit(std::size_t dim, std::size_t axis);

  std::size_t dim() const noexcept { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  std::span<const Rational> coords() const noexcept { return coords_; }

  bool is_zero() const;
  /// Strictly greater than zero in the lexicographic order.
  bool is_positive() const;
  bool is_negative() const;

  friend bool operator==(const GroupElement& a, const GroupElement& b);
  friend std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b);

  GroupElement& operator+=(const GroupElement& other);
  GroupElement& operator-=(const GroupElement& other);

 private:
  std::vector<Rational> coords_;
};

/// Lexicographic comparison; the first differing coordinate decides.
std::strong_ordering lex_cmp(const GroupElement& a, const GroupElement& b);

GroupElement add(const GroupElement& a, const GroupElement& b);
GroupElement neg(const GroupElement& a);
GroupElement scale(const Rational& q, const GroupElement& a);

inline GroupElement operator+(GroupElement a, const GroupElement& b) { return a += b; }
inline GroupElement operator-(GroupElement a, const GroupElement& b) { return a -= b; }
inline GroupElement operator-(const GroupElement& a) { return neg(a); }
inline GroupElement operator*(const Rational& q, const GroupElement& a) { return scale(q, a); }

const GroupElement& lex_min(const GroupElement& a, const GroupElement& b);

struct OrderedGroupSpec {
  std::size_t dimension = 1;

  /// Under the lex order on Q^d, rank and rational rank both equal d.
  std::size_t rank() const noexcept { return dimension; }
  std::size_t rational_rank() const noexcept { return dimension; }
  friend bool operator==(const OrderedGroupSpec&, const OrderedGroupSpec&) = default;
};

/// Q^(front+back) as an extension of the quotient Q^front by the convex
/// subgroup Q^back sitting in the trailing coordinates.
struct CompositionLayout {
  std::size_t front_dims = 0;
  std::size_t back_dims = 0;

  std::size_t total() const noexcept { return front_dims + back_dims; }
  friend bool operator==(const CompositionLayout&, const CompositionLayout&) = default;
};

/// The quotient map onto the leading coordinates.
GroupElement project_quotient(const CompositionLayout& layout, const GroupElement& a);
/// The trailing coordinates; only meaningful on the convex subgroup.
GroupElement project_subgroup(const CompositionLayout& layout, const GroupElement& a);
/// Embeds the convex subgroup by padding leading zeros.
GroupElement include_subgroup(const CompositionLayout& layout, const GroupElement& a);
/// Concatenates a quotient representative and a subgroup element.
GroupElement concat(const GroupElement& front, const GroupElement& back);

/// "(p/q, r, ...)" with reduced fractions and positive denominators.
std::string to_string(const GroupElement& a);
/// Accepts "(1/2, -3, 0)" and the unparenthesized "1/2,-3,0".
GroupElement parse_group_element(std::string_view text);

}  // namespace valform
