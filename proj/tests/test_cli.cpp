#include <gtest/gtest.h>
#include <json.hpp>

#include <sstream>

#include "cli/commands.hpp"
#include "cli/expression.hpp"
#include "cli/spec_files.hpp"
#include "support/errors.hpp"
#include "support/generators.hpp"

using namespace valform;
using valform::testing::code_of;
using valform::testing::Gen;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

std::string example(const std::string& name) { return std::string(VALFORM_EXAMPLES_DIR) + "/" + name; }

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

// Random text in the expression grammar.
std::string random_expression(Gen& g, int depth) {
  static const char* names[] = {"x", "y", "t1"};
  if (depth == 0 || g.integer(0, 3) == 0) {
    switch (g.integer(0, 2)) {
      case 0: return std::to_string(g.integer(0, 9));
      case 1: return std::to_string(g.integer(1, 9)) + "/" + std::to_string(g.integer(1, 9));
      default: return names[g.integer(0, 2)];
    }
  }
  switch (g.integer(0, 5)) {
    case 0: return random_expression(g, depth - 1) + " + " + random_expression(g, depth - 1);
    case 1: return random_expression(g, depth - 1) + "-" + random_expression(g, depth - 1);
    case 2: return random_expression(g, depth - 1) + "*" + random_expression(g, depth - 1);
    case 3: return "-" + random_expression(g, depth - 1);
    case 4: return "(" + random_expression(g, depth - 1) + ")";
    default: {
      const std::string base = "(" + random_expression(g, depth - 1) + ")";
      if (g.coin()) return base + "^" + std::to_string(g.integer(0, 3));
      return base + "^(" + std::to_string(g.integer(-3, 3)) + "/" + std::to_string(g.integer(1, 3)) + ")";
    }
  }
}

}  // namespace

TEST(Expression, Parse) {
  const VariableContext xy({"x", "y"});
  const auto e = cli::parse_expression("x^3 + x*y^2 + y^4", &xy);
  EXPECT_EQ(cli::pretty_print(*e), "x^3 + x*y^2 + y^4");
  EXPECT_EQ(cli::parse_expression("1/(1 - t)")->kind, cli::Expr::Kind::Div);
  EXPECT_EQ(cli::evaluate(*cli::parse_expression("x^(1/2)*x^(1/2)"), xy), RationalFunction::variable(xy, "x"));
  // '^' binds tighter than unary minus
  EXPECT_EQ(cli::evaluate(*cli::parse_expression("-x^2"), xy), -RationalFunction::variable(xy, "x").pow(2));
  EXPECT_EQ(cli::pretty_print(*cli::parse_expression("a - (b - c)")), "a - (b - c)");
  EXPECT_EQ(cli::pretty_print(*cli::parse_expression("(a/b)/c")), "a/b/c");
  EXPECT_EQ(cli::pretty_print(*cli::parse_expression("a/(b*c)")), "a/(b*c)");
}

TEST(Expression, Errors) {
  const VariableContext xy({"x", "y"});
  try {
    (void)cli::parse_expression("x +\n  * y");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SyntaxError);
    EXPECT_NE(std::string(e.what()).find("line 2, column 3"), std::string::npos) << e.what();
  }
  EXPECT_EQ(code_of([&] { (void)cli::parse_expression("x + z", &xy); }), ErrorCode::UnknownVariable);
  EXPECT_EQ(code_of([] { (void)cli::parse_expression("x^y"); }), ErrorCode::SyntaxError);
  EXPECT_EQ(cli::evaluate(*cli::parse_expression("x^1/2"), xy), RationalFunction::variable(xy, "x") / RationalFunction::constant(xy, 2));
  EXPECT_EQ(code_of([] { (void)cli::parse_expression("x^(1/0)"); }), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of([] { (void)cli::parse_expression("(x"); }), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of([&] { (void)cli::evaluate(*cli::parse_expression("1/(x-x)"), xy); }), ErrorCode::DivisionByZero);
}

TEST(Expression, RoundTrip) {
  Gen g(71);
  const VariableContext ctx({"x", "y", "t1"});
  for (int k = 0; k < 500; ++k) {
    const std::string text = random_expression(g, 4);
    const auto first = cli::parse_expression(text, &ctx);
    const std::string printed = cli::pretty_print(*first);
    const auto second = cli::parse_expression(printed, &ctx);
    ASSERT_TRUE(cli::structurally_equal(*first, *second)) << text << " -> " << printed;
    EXPECT_EQ(cli::pretty_print(*second), printed);
  }
}

TEST(Form, Parse) {
  const VariableContext tx({"t", "x"});
  const TopForm w = cli::evaluate_form(cli::parse_form("(1/t) d(t) ^ d(x)"), tx);
  EXPECT_EQ(w.coefficient(), RationalFunction::variable(tx, "t").inverse());
  const TopForm one = cli::evaluate_form(cli::parse_form("d(t)^d(x)"), tx);
  EXPECT_EQ(one.coefficient(), RationalFunction::constant(tx, 1));
  EXPECT_EQ(code_of([] { (void)cli::parse_form("(1/t) d(t) d(x)"); }), ErrorCode::SyntaxError);
}

TEST(SpecFiles, Parse) {
  const auto nu = cli::parse_valuation_spec("variables: [t, x]\nweights: {t: [1]}\n", ".");
  EXPECT_TRUE(nu.is_adapted());
  EXPECT_EQ(nu.weight(1), GroupElement({0}));
  const auto handle = cli::parse_valuation_spec("variables: [x, y]\nweights: {x: [1], y: [1]}\n", ".");
  EXPECT_FALSE(handle.is_adapted());
  EXPECT_EQ(code_of([] { (void)cli::parse_valuation_spec("variables: [x]\nweights: {x: [1]}\ncolor: red\n", "."); }),
            ErrorCode::SpecFormat);
  EXPECT_EQ(code_of([] { (void)cli::parse_valuation_spec("variables: [x]\nweights: {x: [1]}\nbasis: [x]\n", "."); }),
            ErrorCode::SpecFormat);
  EXPECT_EQ(code_of([] { (void)cli::parse_valuation_spec("variables: [x]\nweights: {x: [1], y: [2]}\n", "."); }),
            ErrorCode::SpecFormat);
  EXPECT_EQ(code_of([] { (void)cli::parse_valuation_spec("variables: [x, y]\nweights: {x: [1], y: [1, 0]}\n", "."); }),
            ErrorCode::SpecFormat);
  const auto flag = cli::load_valuation_spec(example("flag.spec"));
  EXPECT_TRUE(flag.is_composed());
  EXPECT_EQ(flag.weight(0), GroupElement({1, 0}));

  const auto pair = cli::parse_log_pair("variables: [x, y]\nboundary:\n  - {coeff: 1/2, function: x*y}\n");
  ASSERT_EQ(pair.boundary().components().size(), 1u);
  EXPECT_EQ(pair.boundary().components()[0].coefficient, Rational(1, 2));
  EXPECT_EQ(code_of([] { (void)cli::parse_log_pair("variables: [x]\nboundary:\n  - {coeff: 1, function: x, w: 2}\n"); }),
            ErrorCode::SpecFormat);
}

TEST(Cli, Goldens) {
  EXPECT_EQ(run({"value", "--spec", example("v.spec"), "--expr", "x^3+x*y^2+y^4"}).out, "(6)\n");
  EXPECT_EQ(run({"form-value", "--spec", example("blowup3.spec"), "--form", "1 d(x1)^d(x2)^d(x3)"}).out, "(3)\n");
  EXPECT_EQ(run({"lct", "--pair", example("cusp.pair"), "--H", "x^2+y^3", "--spec", example("w32.spec")}).out, "5/6\n");
  EXPECT_EQ(run({"discrepancy", "--pair", example("cusp.pair"), "--spec", example("blowup2.spec")}).out, "(2)\n");
  EXPECT_EQ(run({"discrepancy", "--pair", example("half_x.pair"), "--spec", example("v.spec")}).out, "(4)\n");
  EXPECT_EQ(run({"residue", "--spec", example("divisor_t.spec"), "--form", "(1/t) d(t)^d(x)"}).out, "(1) d(x)\n");
  EXPECT_EQ(run({"residue", "--spec", example("divisor_t.spec"), "--expr", "(t*x^2+t*x)/(t*x)"}).out, "x + 1\n");
  EXPECT_EQ(run({"form-value", "--spec", example("flag.spec"), "--form", "(1/t) d(t)^d(x)"}).out, "(0, 1)\n");
  EXPECT_EQ(run({"different", "--pair", example("snc.pair"), "--spec", example("divisor_t.spec")}).out, "1/3*div(x)\n");
  EXPECT_EQ(run({"decompose", "--pair", example("snc.pair"), "--spec", example("divisor_t.spec")}).out, "t: 0\n");
  EXPECT_EQ(run({"series", "--series", "[(0,0): 1, (1,0): -1]", "--invert", "4"}).out,
            "[(0, 0): 1, (1, 0): 1, (2, 0): 1, (3, 0): 1]\ntruncated, exact below (4, 0)\n");
  EXPECT_EQ(run({"series", "--series", "[(0,3):2, (1,0):7]", "--residue", "1,1"}).out, "[(3): 2]\n");
  EXPECT_EQ(run({"series", "--series", "[(2,0): 1]", "--partial", "0"}).out, "[(1, 0): 2]\n");
}

TEST(Cli, AdjunctionAndProbe) {
  const Result adj = run({"adjunction-check", "--pair", example("snc.pair"), "--spec", example("divisor_t.spec"),
                          "--inner", example("point_x.spec")});
  EXPECT_EQ(adj.code, 0);
  EXPECT_EQ(adj.out, "ambient (0, 2/3)\ncenter (2/3)\nequal true\n");

  const Result ok = run({"probe", "--pair", example("snc.pair"), "--mode", "lc", "--samples", "300"});
  EXPECT_EQ(ok.code, 0);
  EXPECT_NE(ok.out.find("violations 0"), std::string::npos);

  const Result bad = run({"probe", "--pair", example("planted.pair"), "--samples", "50", "--seed", "5"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("sample 0: x=(1) y=(0) a=(-1/2)"), std::string::npos) << bad.out;
}

TEST(Cli, DeterministicOutput) {
  const std::vector<std::string> args{"probe", "--pair", example("planted.pair"), "--samples", "400", "--seed", "17",
                                      "--format", "json"};
  const Result a = run(args);
  const Result b = run(args);
  EXPECT_EQ(a.out, b.out);
  auto threads = args;
  threads.insert(threads.end(), {"--threads", "3"});
  EXPECT_EQ(run(threads).out, a.out);
}

TEST(Cli, Json) {
  const Result r = run({"--format", "json", "lct", "--pair", example("cusp.pair"), "--H", "x^2+y^3", "--spec",
                        example("w32.spec")});
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["command"], "lct");
  EXPECT_EQ(doc["result"], "5/6");
  const Result trailing = run({"value", "--spec", example("v.spec"), "--expr", "x/y", "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(trailing.out)["result"], "(-1)");
}

TEST(Cli, ErrorsAndExitCodes) {
  const Result unknown = run({"value", "--spec", example("v.spec"), "--expr", "x+z"});
  EXPECT_EQ(unknown.code, 2);
  EXPECT_EQ(unknown.out, "");
  EXPECT_NE(unknown.err.find("error [cli/UnknownVariable]"), std::string::npos) << unknown.err;

  const Result zero = run({"value", "--spec", example("v.spec"), "--expr", "x-x"});
  EXPECT_EQ(zero.code, 2);
  EXPECT_NE(zero.err.find("error [valuation/ZeroFunction]"), std::string::npos) << zero.err;

  const Result json = run({"--format", "json", "value", "--spec", example("v.spec"), "--expr", "x-x"});
  EXPECT_EQ(nlohmann::json::parse(json.out)["error"]["code"], "ZeroFunction");

  EXPECT_EQ(run({"value", "--spec", example("missing.spec"), "--expr", "x"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"value", "--expr", "x"}).code, 2);
  EXPECT_EQ(run({"residue", "--spec", example("divisor_t.spec")}).code, 2);
  EXPECT_EQ(run({"series", "--series", "[(1): 1]", "--invert", "2", "--partial", "0"}).code, 2);
  EXPECT_EQ(run({"decompose", "--pair", example("half_x.pair"), "--spec", example("v.spec")}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}
