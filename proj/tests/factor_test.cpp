#include <gtest/gtest.h>

#include "singdef/numberfield.hpp"
#include "singdef/qfactor.hpp"

namespace singdef {
namespace {

QPoly q(std::initializer_list<int> c) {
  std::vector<Rational> v;
  for (int x : c) v.emplace_back(x);
  return QPoly(std::move(v));
}

TEST(FactorRational, CyclotomicEightIsIrreducible) {
  EXPECT_TRUE(is_irreducible_rational(q({1, 0, 0, 0, 1})));
}

TEST(FactorRational, SplitsDifferenceOfSquares) {
  auto f = factor_rational(q({-4, 0, 0, 0, 1}));
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0].first, q({-2, 0, 1}));
  EXPECT_EQ(f[1].first, q({2, 0, 1}));
}

TEST(FactorRational, SwinnertonDyerStyleQuarticIsIrreducible) {
  // Minimal polynomial of sqrt2 + sqrt3; reducible modulo every prime.
  EXPECT_TRUE(is_irreducible_rational(q({1, 0, -10, 0, 1})));
}

TEST(FactorRational, RecoversMultiplicitiesAndRationalScaling) {
  // 3 (x - 1)^2 (x + 2) (x^2 + x + 1)
  QPoly f = q({-1, 1}) * q({-1, 1}) * q({2, 1}) * q({1, 1, 1}) * Rational(3);
  auto fs = factor_rational(f);
  ASSERT_EQ(fs.size(), 3u);
  EXPECT_EQ(fs[0], std::make_pair(q({-1, 1}), 2u));
  EXPECT_EQ(fs[1], std::make_pair(q({2, 1}), 1u));
  EXPECT_EQ(fs[2], std::make_pair(q({1, 1, 1}), 1u));
}

TEST(FactorRational, HandlesNonIntegralCoefficients) {
  QPoly f(std::vector<Rational>{Rational(-1, 4), 0, 1});
  auto fs = factor_rational(f);
  ASSERT_EQ(fs.size(), 2u);
  EXPECT_EQ(fs[0].first, QPoly(std::vector<Rational>{Rational(-1, 2), 1}));
}

TEST(FactorRational, ConstantHasNoFactors) { EXPECT_TRUE(factor_rational(q({5})).empty()); }

TEST(NumberField, ArithmeticInGaussianRationals) {
  auto k = std::make_shared<const NumberField>(q({1, 0, 1}));
  Algebraic i = Algebraic::generator(k);
  EXPECT_EQ(i * i, Algebraic(-1));
  EXPECT_EQ((Algebraic(1) + i).inverse(), (Algebraic(1) - i) / Algebraic(2));
  EXPECT_EQ(i.pow(-1), -i);
  EXPECT_EQ(i.pow(4), Algebraic(1));
}

TEST(NumberField, XSquaredPlusOneSplitsOverGaussianRationals) {
  auto k = std::make_shared<const NumberField>(q({1, 0, 1}));
  auto fs = factor_over(to_kpoly(q({1, 0, 1})), k);
  ASSERT_EQ(fs.size(), 2u);
  for (const auto& [g, m] : fs) EXPECT_EQ(g.degree(), 1);
}

TEST(NumberField, XFourthPlusOneOverQi) {
  // x^4 + 1 = (x^2 - i)(x^2 + i) over Q(i).
  auto k = std::make_shared<const NumberField>(q({1, 0, 1}));
  auto fs = factor_over(to_kpoly(q({1, 0, 0, 0, 1})), k);
  ASSERT_EQ(fs.size(), 2u);
  for (const auto& [g, m] : fs) EXPECT_EQ(g.degree(), 2);
}

TEST(NumberField, FactorOverNullFieldMatchesRational) {
  auto fs = factor_over(to_kpoly(q({-4, 0, 0, 0, 1})), nullptr);
  ASSERT_EQ(fs.size(), 2u);
}

TEST(NumberField, TowerOfSquareRoots) {
  auto k = std::make_shared<const NumberField>(q({-2, 0, 1}));
  // Adjoin sqrt3 to Q(sqrt2); x^2 - 3 stays irreducible over Q(sqrt2).
  KPoly phi = to_kpoly(q({-3, 0, 1}));
  ASSERT_EQ(factor_over(phi, k).size(), 1u);
  FieldExtension ext = extend_field(k, phi);
  EXPECT_EQ(ext.field->degree(), 4u);
  Algebraic s2 = ext.base_generator, s3 = ext.root;
  EXPECT_EQ(s2 * s2, Algebraic(2));
  EXPECT_EQ(s3 * s3, Algebraic(3));
  EXPECT_EQ(embed(Algebraic::generator(k) + Algebraic(1), ext), s2 + Algebraic(1));
  // x^2 - 6 now splits.
  EXPECT_EQ(factor_over(to_kpoly(q({-6, 0, 1})), ext.field).size(), 2u);
}

TEST(NumberField, ExtendingQGivesRootOfPhi) {
  FieldExtension ext = extend_field(nullptr, to_kpoly(q({-1, -1, 0, 1})));
  Algebraic r = ext.root;
  EXPECT_EQ(r * r * r, r + Algebraic(1));
}

}  // namespace
}  // namespace singdef
