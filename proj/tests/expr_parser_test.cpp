#include <gtest/gtest.h>

#include "singdef/errors.hpp"
#include "singdef/expr_parser.hpp"

using namespace singdef;

namespace {

std::size_t error_position(const std::string& text) {
  try {
    parse_polynomial(text, threefold_ring());
  } catch (const ParseError& e) {
    return e.position();
  }
  ADD_FAILURE() << "no parse error for " << text;
  return 0;
}

}  // namespace

TEST(ExprParser, RoundTrip) {
  for (const char* text : {"x^2 + y^2 + z^2 + w^5", "1/2*w^3 - 7/3*x*y", "x*y - z*w*(z + w)",
                           "-x^3 + 4", "(x - 1/2)^3 - (x^3 - 1/8)"}) {
    Polynomial p = parse_polynomial(text, threefold_ring());
    EXPECT_EQ(parse_polynomial(render_polynomial(p), threefold_ring()), p) << text;
  }
}

TEST(ExprParser, Rendering) {
  EXPECT_EQ(render_polynomial(parse_polynomial("0", threefold_ring())), "0");
  EXPECT_EQ(render_polynomial(parse_polynomial("-y + x^2", threefold_ring())), "x^2 - y");
  EXPECT_EQ(render_polynomial(parse_polynomial("w^3*1/2", threefold_ring())), "1/2*w^3");
}

TEST(ExprParser, UnaryMinusAndPrecedence) {
  auto R = threefold_ring();
  EXPECT_EQ(parse_polynomial("-x^2", R), -parse_polynomial("x^2", R));
  EXPECT_EQ(parse_polynomial("2*x^2*y", R), parse_polynomial("x^2*(2*y)", R));
  EXPECT_EQ(parse_polynomial("--x", R), parse_polynomial("x", R));
}

TEST(ExprParser, ErrorPositions) {
  EXPECT_EQ(error_position("x^2 + q"), 6u);
  EXPECT_EQ(error_position("x + (y"), 6u);
  EXPECT_EQ(error_position("x^0"), 2u);
  EXPECT_EQ(error_position("x $ y"), 2u);
  EXPECT_EQ(error_position("x^99999999999"), 2u);
  EXPECT_EQ(error_position("1/0"), 2u);
  EXPECT_EQ(error_position(""), 0u);
}

TEST(ExprParser, DeclaredVariables) {
  ExprSource src{"a*b + c^2", {"a", "b", "c"}};
  Polynomial p = parse_polynomial(src);
  EXPECT_EQ(p.nvars(), 3u);
  EXPECT_THROW(parse_polynomial(ExprSource{"x", {"a"}}), ParseError);
}
