#include <gtest/gtest.h>

#include "support/errors.hpp"
#include "support/generators.hpp"
#include "valform/errors.hpp"
#include "valform/linalg.hpp"
#include "valform/ordgroup.hpp"

using namespace valform;
using valform::testing::code_of;
using valform::testing::Gen;

namespace {

Rational q(long p, long r = 1) {
  Rational x(p, r);
  x.canonicalize();
  return x;
}

}  // namespace

TEST(OrdGroup, LexCompare) {
  EXPECT_EQ(lex_cmp({1, 0}, {0, 5}), std::strong_ordering::greater);
  EXPECT_EQ(lex_cmp({0, 0}, {0, 0}), std::strong_ordering::equal);
  EXPECT_EQ(lex_cmp({q(1, 2), 7}, {q(1, 2), 8}), std::strong_ordering::less);
  EXPECT_TRUE(GroupElement({0, 1}).is_positive());
  EXPECT_TRUE(GroupElement({-1, 9}).is_negative());
  EXPECT_TRUE(GroupElement::zero(3).is_zero());
}

TEST(OrdGroup, LexCompareDimensionMismatch) {
  EXPECT_EQ(code_of([] { (void)lex_cmp({1}, {1, 0}); }), ErrorCode::DimensionMismatch);
  EXPECT_EQ(code_of([] { (void)add({1}, {1, 0}); }), ErrorCode::DimensionMismatch);
}

TEST(OrdGroup, Arithmetic) {
  EXPECT_EQ(add({1, 2}, {3, 4}), GroupElement({4, 6}));
  EXPECT_EQ(scale(q(1, 2), {1, 3}), GroupElement({q(1, 2), q(3, 2)}));
  const GroupElement a{q(2, 3), -5};
  EXPECT_TRUE(add(a, neg(a)).is_zero());
  EXPECT_EQ(lex_min(GroupElement{1, 0}, GroupElement{0, 9}), GroupElement({0, 9}));
}

TEST(OrdGroup, Layout) {
  EXPECT_EQ(project_quotient({1, 1}, {3, 7}), GroupElement({3}));
  EXPECT_EQ(project_quotient({2, 1}, {0, 0, 5}), GroupElement({0, 0}));
  EXPECT_EQ(project_quotient({1, 2}, {2, 1, 1}), GroupElement({2}));
  EXPECT_EQ(include_subgroup({1, 1}, {4}), GroupElement({0, 4}));
  EXPECT_EQ(include_subgroup({2, 2}, {1, 2}), GroupElement({0, 0, 1, 2}));
  EXPECT_TRUE(project_quotient({2, 2}, include_subgroup({2, 2}, {1, 2})).is_zero());
  EXPECT_EQ(project_subgroup({1, 2}, {0, 3, 4}), GroupElement({3, 4}));
  EXPECT_EQ(concat({1}, {2, 3}), GroupElement({1, 2, 3}));
  EXPECT_EQ(code_of([] { (void)project_quotient({1, 1}, {1, 2, 3}); }), ErrorCode::LayoutMismatch);
  EXPECT_EQ(code_of([] { (void)include_subgroup({1, 2}, {1}); }), ErrorCode::LayoutMismatch);
}

TEST(OrdGroup, PrintAndParse) {
  EXPECT_EQ(to_string(GroupElement{q(1, 2), 3}), "(1/2, 3)");
  EXPECT_EQ(to_string(GroupElement{q(-4, 6)}), "(-2/3)");
  EXPECT_EQ(parse_group_element("(1/2, 3)"), GroupElement({q(1, 2), 3}));
  EXPECT_EQ(parse_group_element("2,-1/3"), GroupElement({2, q(-1, 3)}));
  EXPECT_EQ(code_of([] { (void)parse_group_element("(1/0)"); }), ErrorCode::DivisionByZero);
  EXPECT_EQ(code_of([] { (void)parse_group_element("(1, x)"); }), ErrorCode::SyntaxError);
}

TEST(OrdGroupProperty, OrderCompatibleWithAddition) {
  Gen g(11);
  for (int k = 0; k < 500; ++k) {
    const std::size_t d = static_cast<std::size_t>(g.integer(1, 4));
    const GroupElement a = g.element(d), b = g.element(d), c = g.element(d);
    if (a < b) EXPECT_LT(a + c, b + c);
    if (a == b) EXPECT_EQ(a + c, b + c);
    if (a.is_positive() && b.is_positive()) EXPECT_TRUE((a + b).is_positive());
    // total order: exactly one of <, ==, >
    EXPECT_EQ((a < b) + (a == b) + (a > b), 1);
  }
}

TEST(OrdGroupProperty, ExactSequence) {
  Gen g(12);
  for (int k = 0; k < 300; ++k) {
    const CompositionLayout layout{static_cast<std::size_t>(g.integer(1, 3)), static_cast<std::size_t>(g.integer(1, 3))};
    const GroupElement back = g.element(layout.back_dims);
    const GroupElement front = g.element(layout.front_dims);
    EXPECT_TRUE(project_quotient(layout, include_subgroup(layout, back)).is_zero());
    EXPECT_EQ(project_subgroup(layout, include_subgroup(layout, back)), back);
    EXPECT_EQ(project_quotient(layout, concat(front, back)), front);
  }
}

TEST(Linalg, DeterminantAgainstPermutationExpansion) {
  Gen g(13);
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 4));
    linalg::Matrix m(n, std::vector<Rational>(n));
    for (auto& row : m)
      for (auto& x : row) x = g.rational();
    EXPECT_EQ(linalg::determinant(m), valform::testing::leibniz_det(m));
  }
}

TEST(Linalg, CoordinatesInSpan) {
  const std::vector<GroupElement> basis{{1, 0}, {1, 1}};
  const auto c = linalg::coordinates_in_span(basis, {3, 2});
  ASSERT_TRUE(c);
  EXPECT_EQ((*c)[0], 1);
  EXPECT_EQ((*c)[1], 2);
  EXPECT_FALSE(linalg::coordinates_in_span({{1, 0, 0}}, {0, 1, 0}));
}
