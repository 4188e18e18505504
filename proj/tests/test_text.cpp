#include <gtest/gtest.h>

#include "helpers.hpp"
#include "socle/error.hpp"

using namespace socle;

namespace {

PolyExpr parse_expr(const std::string& text) {
  Lexer lex(text);
  PolyExpr e = parse_poly_expr(lex);
  EXPECT_TRUE(lex.at_end());
  return e;
}

}  // namespace

TEST(Text, PrecedenceOfPowerOverProductOverSum) {
  auto r = testing_helpers::ring("Q[x,y]");
  EXPECT_EQ(parse_polynomial("x + 2*y^2", r->ambient()).to_string(), "2*y^2 + x");
  EXPECT_EQ(parse_polynomial("-x^2", r->ambient()), parse_polynomial("-(x^2)", r->ambient()));
  EXPECT_EQ(parse_polynomial("(x+y)^2 - x*(x + 2*y)", r->ambient()), parse_polynomial("y^2", r->ambient()));
  EXPECT_EQ(parse_polynomial("x - y - x", r->ambient()), parse_polynomial("-y", r->ambient()));
}

TEST(Text, FormattingReparsesToTheSameTree) {
  for (std::string s : {"x + 2*y^2", "-(x + y)^3", "(x - y)*(x + y)", "x - (y - 1)", "3/4*x^2*y", "-x^2",
                        "x*(y*z)", "((x))", "x - -y"}) {
    PolyExpr e = parse_expr(s);
    EXPECT_EQ(parse_expr(format_poly_expr(e)), e) << s << " -> " << format_poly_expr(e);
  }
}

TEST(Text, ErrorsCarryPositions) {
  auto r = testing_helpers::ring("Q[x,y]");
  try {
    parse_polynomial("x +\n  * y", r->ambient());
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 3);
  }
  EXPECT_THROW(parse_polynomial("x + z", r->ambient()), ParseError);
  EXPECT_THROW(parse_polynomial("x^", r->ambient()), ParseError);
  EXPECT_THROW(parse_polynomial("(x + y", r->ambient()), ParseError);
}

TEST(Text, CommentsAndLists) {
  auto r = testing_helpers::ring("Q[x,y]");
  auto list = parse_polynomial_list("(x^2, # squares\n x*y // mixed\n)", r->ambient());
  ASSERT_EQ(list.size(), 2u);
  EXPECT_EQ(format_polynomial_list(list), "(x^2, x*y)");
  EXPECT_EQ(parse_polynomial_list("x, y", r->ambient()).size(), 2u);
}
