#include <gtest/gtest.h>

#include "singdef/errors.hpp"
#include "singdef/expr_parser.hpp"
#include "singdef/polyring.hpp"
#include "singdef/upoly.hpp"

using namespace singdef;

namespace {

Polynomial P(const char* text) { return parse_polynomial(text, threefold_ring()); }

}  // namespace

TEST(Ring, RejectsDuplicateNames) {
  EXPECT_THROW(Ring({"x", "x"}), std::invalid_argument);
  EXPECT_THROW(Ring({"1x"}), std::invalid_argument);
}

TEST(Ring, MismatchedRingsThrow) {
  auto a = Ring::make({"x", "y"});
  auto b = Ring::make({"u", "v"});
  Polynomial p = Polynomial::variable(a, 0);
  Polynomial q = Polynomial::variable(b, 0);
  EXPECT_THROW(p += q, RingMismatchError);
}

TEST(Monomial, LocalOrderPrefersLowDegree) {
  Monomial one(4), x{1, 0, 0, 0}, w{0, 0, 0, 1}, x2{2, 0, 0, 0};
  EXPECT_GT(compare(one, x, MonomialOrder::LocalDegRevLex), 0);
  EXPECT_GT(compare(x, x2, MonomialOrder::LocalDegRevLex), 0);
  EXPECT_GT(compare(x, w, MonomialOrder::LocalDegRevLex), 0);
  EXPECT_LT(compare(x, x2, MonomialOrder::GlobalDegRevLex), 0);
}

TEST(Polynomial, ArithmeticCancels) {
  Polynomial p = P("x^2 + y*z - 3");
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ(P("(x+y)^2"), P("x^2 + 2*x*y + y^2"));
  EXPECT_EQ(P("(x - y)*(x + y)"), P("x^2 - y^2"));
  EXPECT_EQ(P("x^3 + w").order(), 1);
  EXPECT_EQ(P("x^3 + w").degree(), 3);
}

TEST(Polynomial, LocalLeadingTermIsLowestDegree) {
  Polynomial p = P("x^5 + 2*y^2 + z*w");
  auto lt = p.leading_term(MonomialOrder::LocalDegRevLex);
  EXPECT_EQ(lt.first.degree(), 2u);
}

TEST(Polynomial, PartialDerivative) {
  EXPECT_EQ(partial_derivative(P("x^3*y + y^2"), 0), P("3*x^2*y"));
  EXPECT_EQ(partial_derivative(P("x^3*y + y^2"), 1), P("x^3 + 2*y"));
}

TEST(LinearChange, SubstituteAndInvert) {
  RationalMatrix m = RationalMatrix::identity(4);
  m(3, 0) = 2;
  m(3, 2) = -1;
  LinearChange change(m);
  Polynomial f = P("w^2 + x");
  Polynomial g = substitute_linear(f, change);
  EXPECT_EQ(g, P("(w + 2*x - z)^2 + x"));
  EXPECT_EQ(substitute_linear(g, change.inverse()), f);
  RationalMatrix singular(4, 4);
  EXPECT_THROW(LinearChange{singular}, std::invalid_argument);
}

TEST(Polynomial, HessianRank) {
  EXPECT_EQ(hessian_rank_at_origin(P("x^2 + y^2 + z^2 + w^5")), 3u);
  EXPECT_EQ(hessian_rank_at_origin(P("x*y + z^3")), 2u);
  EXPECT_EQ(hessian_rank_at_origin(P("x^3 + y^3")), 0u);
}

TEST(Polynomial, ExactQuotient) {
  auto q = exact_quotient(P("x^2 - y^2"), P("x - y"));
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, P("x + y"));
  EXPECT_FALSE(exact_quotient(P("x^2 + y^2"), P("x - y")).has_value());
}

TEST(Polynomial, BivariateGcdAndSquarefree) {
  auto R = curve_ring();
  auto C = [&](const char* t) { return parse_polynomial(t, R); };
  EXPECT_EQ(bivariate_gcd(C("z^2 - w^2"), C("z^2 + 2*z*w + w^2")), C("z + w"));
  EXPECT_EQ(squarefree_part(C("(z^2 + w^3)^2*(z - w)")), C("(z^2 + w^3)*(z - w)").monic());
  EXPECT_EQ(squarefree_part(C("z*w")), C("z*w"));
}

TEST(UPoly, GcdResultantInterpolate) {
  QPoly a{Rational(-1), Rational(0), Rational(1)};  // x^2 - 1
  QPoly b{Rational(1), Rational(1)};                // x + 1
  EXPECT_EQ(gcd(a, b), b);
  EXPECT_EQ(resultant(a, QPoly{Rational(-2), Rational(1)}), Rational(3));
  // res(x^2 + 1, x^2 - 2) = (i^2-2)((-i)^2-2) = 9
  EXPECT_EQ(resultant(QPoly{Rational(1), Rational(0), Rational(1)},
                      QPoly{Rational(-2), Rational(0), Rational(1)}),
            Rational(9));
  QPoly p{Rational(3), Rational(-1), Rational(0), Rational(2)};
  std::vector<Rational> xs{0, 1, 2, 5}, ys;
  for (auto& x : xs) ys.push_back(p(x));
  EXPECT_EQ(interpolate(xs, ys), p);
}

TEST(UPoly, SquarefreeDecomposition) {
  QPoly x1{Rational(-1), Rational(1)}, x2{Rational(2), Rational(1)};
  auto parts = squarefree_decomposition(x1 * x2 * x2 * x2);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0].first, x1);
  EXPECT_EQ(parts[0].second, 1u);
  EXPECT_EQ(parts[1].first, x2);
  EXPECT_EQ(parts[1].second, 3u);
}
