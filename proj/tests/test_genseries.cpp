#include <gtest/gtest.h>

#include "support/errors.hpp"
#include "support/generators.hpp"
#include "support/literals.hpp"
#include "support/properties.hpp"
#include "valform/genseries.hpp"
#include "valform/linalg.hpp"

using namespace valform;
using valform::testing::code_of;
using valform::testing::Gen;
using valform::testing::poly;

namespace {

GenSeries S(std::string_view text) { return parse_series(text); }

Rational q(long p, long r = 1) {
  Rational x(p, r);
  x.canonicalize();
  return x;
}

}  // namespace

TEST(GenSeries, FromPolynomial) {
  const VariableContext xy({"x", "y"});
  EXPECT_EQ(series_from_poly(poly(xy, "x+y"), {{1, 0}, {0, 1}}), S("[(0,1): 1, (1,0): 1]"));
  EXPECT_EQ(series_from_poly(poly(xy, "x^2+2*x^2"), {{1}, {5}}), S("[(2): 3]"));
  EXPECT_EQ(series_from_poly(poly(xy, "x+y"), {{1}, {1}}), S("[(1): 2]"));
  EXPECT_TRUE(series_from_poly(poly(xy, "x-x"), {{1}, {1}}).is_zero());
}

TEST(GenSeries, Arithmetic) {
  EXPECT_EQ(S("[(1): 1]") * S("[(-1): 1]"), S("[(0): 1]"));
  EXPECT_EQ(S("[(0):1, (1):1]") * S("[(0):1, (1):-1]"), S("[(0):1, (2):-1]"));
  EXPECT_TRUE((S("[(0):1, (1):1]") * GenSeries(OrderedGroupSpec{1})).is_zero());
  EXPECT_EQ(S("[(0,0):1, (1,0):-1]") * S("[(0,0):1,(1,0):1,(2,0):1,(3,0):1]"), S("[(0,0):1, (4,0):-1]"));
  EXPECT_EQ(code_of([] { (void)(S("[(1): 1]") + S("[(1,0): 1]")); }), ErrorCode::GroupMismatch);
}

TEST(GenSeries, Invert) {
  InversePolicy four;
  four.max_terms = 4;
  const GenSeries r = series_invert(S("[(0):1, (1):-1]"), four);
  EXPECT_EQ(r.terms(), S("[(0):1, (1):1, (2):1, (3):1]").terms());
  ASSERT_TRUE(r.truncation());
  EXPECT_EQ(r.truncation()->precision, GroupElement({4}));

  const GenSeries z = series_invert(S("[(1): 1]"));
  EXPECT_EQ(z, S("[(-1): 1]"));
  EXPECT_TRUE(z.is_exact());

  InversePolicy two;
  two.max_terms = 2;
  const GenSeries h = series_invert(S("[(0):2, (1):1]"), two);
  EXPECT_EQ(h.terms(), S("[(0): 1/2, (1): -1/4]").terms());
  EXPECT_FALSE(h.is_exact());

  EXPECT_EQ(code_of([] { (void)series_invert(GenSeries(OrderedGroupSpec{1})); }), ErrorCode::ZeroSeries);
}

TEST(GenSeries, InvertWithCutoff) {
  InversePolicy p;
  p.max_terms = 100;
  p.cutoff = GroupElement{q(5, 2)};
  const GenSeries r = series_invert(S("[(0):1, (1/2):-1]"), p);
  EXPECT_EQ(r.terms(), S("[(0):1, (1/2):1, (1):1, (3/2):1, (2):1, (5/2):1]").terms());
  ASSERT_TRUE(r.truncation());
}

TEST(GenSeries, Value) {
  EXPECT_EQ(series_value(S("[(2,3):5, (2,4):1]")), GroupElement({2, 3}));
  EXPECT_EQ(series_value(GenSeries::constant(OrderedGroupSpec{3}, 1)), GroupElement::zero(3));
  EXPECT_EQ(code_of([] { (void)series_value(GenSeries(OrderedGroupSpec{2})); }), ErrorCode::ZeroSeries);
}

TEST(GenSeries, FormalPartial) {
  const SeriesVariableFrame f = default_frame(2);
  EXPECT_EQ(f.names, (std::vector<std::string>{"z1", "z2"}));
  EXPECT_EQ(formal_partial(S("[(2,0): 1]"), f, 0), S("[(1,0): 2]"));
  EXPECT_EQ(formal_partial(S("[(1/2,0): 1]"), f, 0), S("[(-1/2,0): 1/2]"));
  EXPECT_TRUE(formal_partial(S("[(3,0): 1, (1/3,0): 4]"), f, 1).is_zero());
  EXPECT_EQ(code_of([&] { (void)formal_partial(S("[(1): 1]"), f, 0); }), ErrorCode::FrameMismatch);
}

TEST(GenSeries, Residue) {
  EXPECT_EQ(series_residue(S("[(0,3):2, (1,0):7]"), {1, 1}), S("[(3): 2]"));
  EXPECT_TRUE(series_residue(S("[(1,3):2, (2,-1):7]"), {1, 1}).is_zero());
  EXPECT_EQ(code_of([] { (void)series_residue(S("[(-1,3):2]"), {1, 1}); }), ErrorCode::NotInValuationRing);
  EXPECT_EQ(code_of([] { (void)series_residue(S("[(0,3):2]"), {2, 1}); }), ErrorCode::LayoutMismatch);
}

TEST(GenSeries, FormValue) {
  EXPECT_EQ(series_form_value(S("[(0,0): 1]"), {{1, 0}, {0, 1}}), GroupElement({1, 1}));
  EXPECT_EQ(series_form_value(S("[(-1,-1): 1]"), {{1, 0}, {0, 1}}), GroupElement({0, 0}));
  const VariableContext xy({"x", "y"});
  EXPECT_EQ(series_form_value(series_from_poly(poly(xy, "x^3+x*y^2"), {{2}, {3}}), {{2}, {3}}), GroupElement({11}));
}

TEST(GenSeries, PrintParse) {
  const GenSeries s = S("[(1,0): -1, (0,0): 1]");
  EXPECT_EQ(to_string(s), "[(0, 0): 1, (1, 0): -1]");
  EXPECT_EQ(parse_series(to_string(s)), s);
  EXPECT_EQ(code_of([] { (void)S("[(1): 1, (1,0): 2]"); }), ErrorCode::DimensionMismatch);
  EXPECT_EQ(code_of([] { (void)S("[(1) 1]"); }), ErrorCode::SyntaxError);
}

TEST(GenSeriesProperty, Leibniz) {
  Gen g(61);
  for (int k = 0; k < 150; ++k) EXPECT_EQ(valform::testing::series_leibniz(g), std::nullopt);
}

TEST(GenSeriesProperty, ResidueCommutesWithPartial) {
  Gen g(62);
  for (int k = 0; k < 150; ++k) EXPECT_EQ(valform::testing::series_residue_commutes(g), std::nullopt);
}

TEST(GenSeriesProperty, InversePrefixes) {
  Gen g(63);
  for (int k = 0; k < 150; ++k) EXPECT_EQ(valform::testing::invert_prefixes(g), std::nullopt);
}

TEST(GenSeriesProperty, ValuationAxioms) {
  Gen g(64);
  for (int k = 0; k < 200; ++k) {
    const std::size_t d = static_cast<std::size_t>(g.integer(1, 3));
    const GenSeries a = g.series(d), b = g.series(d);
    EXPECT_EQ(series_value(a * b), series_value(a) + series_value(b));
    const GenSeries sum = a + b;
    if (!sum.is_zero()) EXPECT_GE(series_value(sum), lex_min(series_value(a), series_value(b)));
  }
}

// x_j d/dx_j corresponds to sum_i c_i z_i d/dz_i, where W c = e_j for the weight matrix W.
TEST(GenSeriesProperty, PartialMatchesPolynomialDerivative) {
  Gen g(65);
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 3));
    const VariableContext ctx = valform::testing::vars(n);
    const auto w = g.independent(n);
    const Polynomial p = g.polynomial(ctx, 4, 3, true);
    const std::size_t j = static_cast<std::size_t>(g.integer(0, static_cast<int>(n) - 1));
    const GenSeries lhs = series_from_poly(partial(p, j).times(Monomial::variable(j)), w);
    const GenSeries s = series_from_poly(p, w);
    std::vector<GroupElement> columns(n, GroupElement::zero(n));
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t i = 0; i < n; ++i) columns[i] = columns[i] + w[l][i] * GroupElement::unit(n, l);
    const auto c = linalg::coordinates_in_span(columns, GroupElement::unit(n, j));
    ASSERT_TRUE(c);
    const OrderedGroupSpec group{n};
    GenSeries rhs(group);
    for (std::size_t i = 0; i < n; ++i)
      if ((*c)[i] != 0)
        rhs = rhs + GenSeries::monomial(group, GroupElement::unit(n, i), (*c)[i]) * formal_partial(s, default_frame(n), i);
    EXPECT_EQ(lhs, rhs);
  }
}

// y_i = z_i^(m_i): f dz = f / prod(m_i z_i^(m_i - 1)) dy, with basis values m_i e_i.
TEST(GenSeriesProperty, FormValueUnderMonomialBasisChange) {
  Gen g(66);
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 3));
    const OrderedGroupSpec group{n};
    const GenSeries f = g.series(n);
    std::vector<GroupElement> unit_values, powered_values;
    GroupElement shift = GroupElement::zero(n);
    Rational jac = 1;
    for (std::size_t i = 0; i < n; ++i) {
      const Rational m = g.nonzero_rational(3, 2);
      unit_values.push_back(GroupElement::unit(n, i));
      powered_values.push_back(m * GroupElement::unit(n, i));
      shift += (m - 1) * GroupElement::unit(n, i);
      jac *= m;
    }
    const GenSeries moved = f * GenSeries::monomial(group, -shift, 1 / jac);
    EXPECT_EQ(series_form_value(moved, powered_values), series_form_value(f, unit_values));
  }
}
