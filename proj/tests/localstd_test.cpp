#include <gtest/gtest.h>

#include <random>

#include "singdef/errors.hpp"
#include "singdef/expr_parser.hpp"
#include "singdef/localstd.hpp"
#include "singdef/macaulay.hpp"

using namespace singdef;

namespace {

Polynomial P(const std::string& text) { return parse_polynomial(text, threefold_ring()); }

Ideal I(std::initializer_list<const char*> gens) {
  std::vector<Polynomial> v;
  for (const char* g : gens) v.push_back(P(g));
  return Ideal(std::move(v));
}

std::vector<Monomial> sorted(std::vector<Monomial> ms) {
  std::sort(ms.begin(), ms.end(), [](const Monomial& a, const Monomial& b) {
    return compare(a, b, MonomialOrder::LocalDegRevLex) > 0;
  });
  return ms;
}

LinearChange random_change(std::mt19937_64& rng) {
  for (;;) {
    RationalMatrix m(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) m(i, j) = static_cast<int>(rng() % 5) - 2;
    if (m.rank() == 4) return LinearChange(m);
  }
}

}  // namespace

TEST(Ecart, DegreeSpreadAboveLeadingTerm) {
  EXPECT_EQ(ecart(P("x + x^3")), 2);
  EXPECT_EQ(ecart(P("y^2 + x*y")), 0);
  EXPECT_EQ(ecart(P("z")), 0);
}

TEST(MoraNormalForm, ReducesByUnitMultiples) {
  std::vector<Polynomial> w2{P("w^2")}, unit_multiple{P("x + x^2")}, x{P("x")};
  EXPECT_TRUE(mora_normal_form(P("w^3"), w2).is_zero());
  EXPECT_TRUE(mora_normal_form(P("x"), unit_multiple).is_zero());
  EXPECT_EQ(mora_normal_form(P("y"), x), P("y"));
}

TEST(MoraNormalForm, VanishesOnCombinationsOfAStandardBasis) {
  const Ideal ideal = jacobian_ideal(P("x^2 + y^3 + z^3 + w^4 + x*y*z"));
  const auto basis = standard_basis(ideal).elements();
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    Polynomial p(threefold_ring());
    for (const auto& g : ideal.generators()) {
      Polynomial q = Polynomial::constant(threefold_ring(), static_cast<int>(rng() % 5) - 2);
      q += Polynomial::monomial(threefold_ring(), Monomial::variable(4, rng() % 4),
                                static_cast<int>(rng() % 3) + 1);
      p += q * g;
    }
    EXPECT_TRUE(mora_normal_form(p, basis).is_zero()) << render_polynomial(p);
  }
}

TEST(StandardBasis, VariablesAreAlreadyABasis) {
  auto sb = standard_basis(I({"x", "y", "z", "w"}));
  EXPECT_EQ(sorted(sb.staircase()), sorted({Monomial{1, 0, 0, 0}, Monomial{0, 1, 0, 0},
                                            Monomial{0, 0, 1, 0}, Monomial{0, 0, 0, 1}}));
}

TEST(StandardBasis, HiddenPurePower) {
  auto sb = standard_basis(I({"y - x^2", "y", "z", "w"}));
  EXPECT_EQ(colength(sb), Colength::finite(2));
  EXPECT_EQ(colength_oracle(I({"y - x^2", "y", "z", "w"})), Colength::finite(2));
}

TEST(StandardBasis, MonomialJacobian) {
  auto sb = standard_basis(jacobian_ideal(P("x^2 + y^2 + z^2 + w^3")));
  EXPECT_EQ(sorted(sb.staircase()), sorted({Monomial{1, 0, 0, 0}, Monomial{0, 1, 0, 0},
                                            Monomial{0, 0, 1, 0}, Monomial{0, 0, 0, 2}}));
  EXPECT_EQ(sb.truncation_degree(), 0u);
}

TEST(StandardBasis, LeadingCoefficientsAreOne) {
  auto sb = standard_basis(jacobian_ideal(P("x*y - z*w*(z + w)")));
  for (const auto& e : sb.elements())
    EXPECT_EQ(e.leading_term(MonomialOrder::LocalDegRevLex).second, 1);
}

TEST(StandardBasis, Deterministic) {
  const Ideal ideal = tjurina_ideal(P("x^2 + y^2 + z^3 + w^7 + z*w^5"));
  auto a = standard_basis(ideal), b = standard_basis(ideal);
  ASSERT_EQ(a.elements().size(), b.elements().size());
  for (std::size_t i = 0; i < a.elements().size(); ++i) EXPECT_EQ(a.elements()[i], b.elements()[i]);
}

TEST(StandardBasis, PairCapRaisesResourceLimit) {
  StandardBasisOptions options;
  options.max_pairs = 1;
  EXPECT_THROW(standard_basis(tjurina_ideal(P("x^2 + y^2 + z^3 + w^7 + z*w^5")), options),
               ResourceLimitError);
}

TEST(StandardBasis, WorkBudgetRaisesResourceLimit) {
  StandardBasisOptions options;
  options.max_term_operations = 1;
  EXPECT_THROW(standard_basis(tjurina_ideal(P("x^2 + y^2 + z^3 + w^7 + z*w^5")), options),
               ResourceLimitError);
}

TEST(StandardBasis, NonIsolatedGermReportsTruncation) {
  auto sb = standard_basis(jacobian_ideal(P("2*x^2 + y^2 + 3*z^2 - 2*z^4*w - x^3*y*w")));
  EXPECT_GT(sb.truncation_degree(), 0u);
  EXPECT_EQ(colength(sb), Colength::infinite());
}

TEST(Colength, StaircaseExamples) {
  EXPECT_EQ(colength(I({"x", "y", "z", "w^5"})), Colength::finite(5));
  EXPECT_EQ(colength(I({"x^2", "x*y", "y^2", "z", "w"})), Colength::finite(3));
  EXPECT_EQ(colength(I({"x", "y", "z"})), Colength::infinite());
}

TEST(MilnorNumber, CatalogValues) {
  EXPECT_EQ(milnor_number(P("x^2 + y^2 + z^2 + w^2")), Colength::finite(1));
  EXPECT_EQ(milnor_number(P("x^2 + y^2 + z^2 + w^6")), Colength::finite(5));
  EXPECT_EQ(milnor_number(P("x^3 + y^3 + z^3 + w^3")), Colength::finite(16));
  EXPECT_EQ(milnor_number(P("x*y - z*w*(z + w)")), Colength::finite(4));
  EXPECT_EQ(milnor_number(P("x^2 + y^2 + z^2 + w^41")), Colength::finite(40));
}

TEST(TjurinaNumber, CatalogValues) {
  EXPECT_EQ(tjurina_number(P("x^2 + y^2 + z^2 + w^2")), Colength::finite(1));
  EXPECT_EQ(tjurina_number(P("x^2 + y^2 + z^2 + w^6")), Colength::finite(5));
}

TEST(TjurinaNumber, NonQuasiHomogeneousGermHasTauBelowMu) {
  // Frozen from colength_oracle.
  const Polynomial f = P("x^2 + y^2 + z^3 + w^7 + z*w^5");
  EXPECT_EQ(milnor_number(f), Colength::finite(12));
  EXPECT_EQ(tjurina_number(f), Colength::finite(11));
}

TEST(IsIsolated, Examples) {
  EXPECT_TRUE(is_isolated(P("x^2 + y^2 + z^2 + w^2")));
  EXPECT_FALSE(is_isolated(P("x^2 + y^2 + z^2")));
  EXPECT_TRUE(is_isolated(P("x*y - z*w")));
  EXPECT_FALSE(is_isolated(P("1 + x^2")));
}

TEST(MilnorNumber, InvariantUnderLinearChanges) {
  std::mt19937_64 rng(11);
  for (const char* text : {"x^2 + y^2 + z^3 + w^7 + z*w^5", "x*y - z*w*(z + w)",
                           "x^2 + y^3 + z^3 + w^3"}) {
    const Polynomial f = P(text);
    const Colength mu = milnor_number(f), tau = tjurina_number(f);
    for (int trial = 0; trial < 3; ++trial) {
      const Polynomial g = substitute_linear(f, random_change(rng));
      EXPECT_EQ(milnor_number(g), mu) << render_polynomial(g);
      EXPECT_EQ(tjurina_number(g), tau) << render_polynomial(g);
    }
  }
}

TEST(MilnorNumber, AgreesWithOracleOnSemiQuasiHomogeneousGerms) {
  for (const char* text : {"x^2 + y^3 + z^4 + w^4 + y*z^2*w", "x^2 + y^2 + z^3 + w^4 + z^2*w^2",
                           "x^2 + y^3 + z^3 + w^3 + x*y*z*w", "x*y + z^3 + w^4 + z^2*w^2"}) {
    const Polynomial f = P(text);
    EXPECT_EQ(milnor_number(f), colength_oracle(jacobian_ideal(f))) << text;
    EXPECT_EQ(tjurina_number(f), colength_oracle(tjurina_ideal(f))) << text;
  }
}
