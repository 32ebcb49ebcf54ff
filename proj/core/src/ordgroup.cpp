#include "valform/ordgroup.hpp"

#include <cctype>

#include "valform/errors.hpp"

namespace valform {

namespace {

void require_same_dim(const GroupElement& a, const GroupElement& b) {
  if (a.dim() != b.dim())
    throw Error("ordgroup", ErrorCode::DimensionMismatch,
                std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
}

}  // namespace

GroupElement GroupElement::unit(std::size_t dim, std::size_t axis) {
  if (axis >= dim) throw Error("ordgroup", ErrorCode::DimensionMismatch, "axis out of range");
  std::vector<Rational> c(dim);
  c[axis] = 1;
  return GroupElement(std::move(c));
}

bool GroupElement::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

bool GroupElement::is_positive() const {
  for (const auto& c : coords_)
    if (c != 0) return c > 0;
  return false;
}

bool GroupElement::is_negative() const {
  for (const auto& c : coords_)
    if (c != 0) return c < 0;
  return false;
}

bool operator==(const GroupElement& a, const GroupElement& b) {
  return lex_cmp(a, b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b) { return lex_cmp(a, b); }

GroupElement& GroupElement::operator+=(const GroupElement& other) {
  require_same_dim(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

GroupElement& GroupElement::operator-=(const GroupElement& other) {
  require_same_dim(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

std::strong_ordering lex_cmp(const GroupElement& a, const GroupElement& b) {
  require_same_dim(a, b);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const int c = cmp(a[i], b[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

GroupElement add(const GroupElement& a, const GroupElement& b) { return a + b; }

GroupElement neg(const GroupElement& a) {
  std::vector<Rational> c(a.coords().begin(), a.coords().end());
  for (auto& x : c) x = -x;
  return GroupElement(std::move(c));
}

GroupElement scale(const Rational& q, const GroupElement& a) {
  std::vector<Rational> c(a.coords().begin(), a.coords().end());
  for (auto& x : c) x *= q;
  return GroupElement(std::move(c));
}

const GroupElement& lex_min(const GroupElement& a, const GroupElement& b) { return b < a ? b : a; }

GroupElement project_quotient(const CompositionLayout& layout, const GroupElement& a) {
  if (a.dim() != layout.total())
    throw Error("ordgroup", ErrorCode::LayoutMismatch,
                "element of dimension " + std::to_string(a.dim()) + " for layout of total " +
                    std::to_string(layout.total()));
  return GroupElement(std::vector<Rational>(a.coords().begin(), a.coords().begin() + layout.front_dims));
}

GroupElement project_subgroup(const CompositionLayout& layout, const GroupElement& a) {
  if (a.dim() != layout.total())
    throw Error("ordgroup", ErrorCode::LayoutMismatch, "element does not match layout");
  return GroupElement(std::vector<Rational>(a.coords().begin() + layout.front_dims, a.coords().end()));
}

GroupElement include_subgroup(const CompositionLayout& layout, const GroupElement& a) {
  if (a.dim() != layout.back_dims)
    throw Error("ordgroup", ErrorCode::LayoutMismatch,
                "subgroup element of dimension " + std::to_string(a.dim()) + ", layout expects " +
                    std::to_string(layout.back_dims));
  std::vector<Rational> c(layout.front_dims);
  c.insert(c.end(), a.coords().begin(), a.coords().end());
  return GroupElement(std::move(c));
}

GroupElement concat(const GroupElement& front, const GroupElement& back) {
  std::vector<Rational> c(front.coords().begin(), front.coords().end());
  c.insert(c.end(), back.coords().begin(), back.coords().end());
  return GroupElement(std::move(c));
}

std::string to_string(const GroupElement& a) {
  std::string out = "(";
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (i) out += ", ";
    out += to_string(a[i]);
  }
  return out + ")";
}

GroupElement parse_group_element(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (!s.empty() && s.front() == '(') {
    if (s.back() != ')')
      throw Error("ordgroup", ErrorCode::SyntaxError, "unbalanced parenthesis in '" + std::string(text) + "'");
    s = s.substr(1, s.size() - 2);
  }
  if (s.find_first_not_of(" \t\n") == std::string_view::npos) return GroupElement{};
  std::vector<Rational> coords;
  while (true) {
    const auto comma = s.find(',');
    coords.push_back(parse_rational(s.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return GroupElement(std::move(coords));
}

}  // namespace valform
