#include <gtest/gtest.h>

#include "singdef/errors.hpp"
#include "singdef/expr_parser.hpp"
#include "singdef/macaulay.hpp"

using namespace singdef;

namespace {

Polynomial P(const char* text) { return parse_polynomial(text, threefold_ring()); }

Colength milnor(const char* f) { return colength_oracle(jacobian_ideal(P(f))); }
Colength tjurina(const char* f) { return colength_oracle(tjurina_ideal(P(f))); }

}  // namespace

TEST(MacaulayOracle, AnSeries) {
  for (unsigned n = 1; n <= 6; ++n) {
    std::string f = "x^2 + y^2 + z^2 + w^" + std::to_string(n + 1);
    EXPECT_EQ(colength_oracle(jacobian_ideal(P(f.c_str()))), Colength::finite(n)) << f;
  }
}

TEST(MacaulayOracle, QuasiHomogeneousMuEqualsTau) {
  EXPECT_EQ(milnor("x^2 + y^3 + z^3 + w^3"), Colength::finite(8));
  EXPECT_EQ(tjurina("x^2 + y^3 + z^3 + w^3"), Colength::finite(8));
  EXPECT_EQ(milnor("x*y - z*w*(z + w)"), Colength::finite(4));
}

TEST(MacaulayOracle, NonIsolatedIsInfinite) {
  OracleOptions opts;
  opts.max_degree = 10;
  EXPECT_TRUE(colength_oracle(jacobian_ideal(P("x^2 + y^2 + z^2")), opts).is_infinite());
  EXPECT_TRUE(colength_oracle(jacobian_ideal(P("x*y")), opts).is_infinite());
}

TEST(MacaulayOracle, TruncatedDimensionsGrowThenStabilize) {
  auto trace = colength_oracle_trace(jacobian_ideal(P("x^2 + y^2 + z^2 + w^4")));
  ASSERT_FALSE(trace.empty());
  EXPECT_TRUE(trace.back().stabilized);
  EXPECT_EQ(trace.back().quotient_dim, 3u);
  for (std::size_t i = 1; i < trace.size(); ++i)
    EXPECT_GE(trace[i].quotient_dim, trace[i - 1].quotient_dim);
}

TEST(MacaulayOracle, IdealGeneratedByMonomials) {
  Ideal I({P("x^2"), P("y^3"), P("z"), P("w")});
  EXPECT_EQ(colength_oracle(I), Colength::finite(6));
  EXPECT_EQ(truncated_quotient_dim(I, 2), 3u);
}

TEST(MacaulayOracle, SizeCapRaisesResourceLimit) {
  OracleOptions opts;
  opts.max_monomials = 50;
  EXPECT_THROW(truncated_quotient_dim(Ideal({P("x")}), 8, opts), ResourceLimitError);
}
