#include <gtest/gtest.h>

#include "quiverhh/smith.hpp"
#include "support/oracles.hpp"

using namespace quiverhh;

TEST(Smith, Identity) {
  auto s = smith_normal_form(IntMatrix::identity(2));
  EXPECT_EQ(s.diagonal, IntMatrix::identity(2));
  EXPECT_EQ(s.rank, 2u);
}

TEST(Smith, SingleEntry) {
  auto s = smith_normal_form(IntMatrix::from_rows({{5}}));
  EXPECT_EQ(s.invariant_factors(), std::vector<mpz_class>{5});
  EXPECT_EQ(cokernel_group(1, IntMatrix::from_rows({{5}})).to_string(), "Z/5");
}

TEST(Smith, DoubledChainDelta1) {
  IntMatrix d1 = IntMatrix::from_rows({{1, 0}, {-1, 1}, {0, -1}});
  auto s = smith_normal_form(d1);
  EXPECT_EQ(s.invariant_factors(), (std::vector<mpz_class>{1, 1}));
  EXPECT_EQ(s.left * d1 * s.right, s.diagonal);
  EXPECT_EQ(cokernel_group(3, d1).to_string(), "Z");
}

TEST(Smith, DivisibilityChainEnforced) {
  auto s = smith_normal_form(IntMatrix::from_rows({{2, 0}, {0, 3}}));
  EXPECT_EQ(s.invariant_factors(), (std::vector<mpz_class>{1, 6}));
  auto t = smith_normal_form(IntMatrix::from_rows({{4, 6, 2}, {6, 9, 3}}));
  EXPECT_EQ(t.invariant_factors(), (std::vector<mpz_class>{1}));
}

TEST(Cokernel, Examples) {
  EXPECT_EQ(cokernel_group(2, IntMatrix(2, 0)).free_rank(), 2u);
  AbelianGroup g = cokernel_group(2, IntMatrix::from_rows({{2}, {2}}));
  EXPECT_EQ(g.free_rank(), 1u);
  EXPECT_EQ(g.torsion(), std::vector<mpz_class>{2});
  EXPECT_EQ(g.to_string(), "Z + Z/2");
}

TEST(AbelianGroup, CanonicalForm) {
  EXPECT_EQ(AbelianGroup(0, {2, 3}).to_string(), "Z/6");
  EXPECT_EQ(AbelianGroup(0, {4, 6}).to_string(), "Z/2 + Z/12");
  EXPECT_EQ(AbelianGroup(1, {1, 0}).to_string(), "Z^2");
  EXPECT_TRUE(AbelianGroup(0, {1}).is_trivial());
  EXPECT_EQ(AbelianGroup().to_string(), "0");
  EXPECT_EQ(direct_sum(AbelianGroup(1, {}), AbelianGroup(0, {3})).to_string(), "Z + Z/3");
}

TEST(DualDimension, Examples) {
  Field q = Field::rationals();
  AbelianGroup zp(0, {3});
  EXPECT_EQ(dual_dimension(zp, Field::prime(3)), 1u);
  EXPECT_EQ(dual_dimension(zp, q), 0u);
  AbelianGroup z_z2(1, {2});
  EXPECT_EQ(dual_dimension(z_z2, Field::prime(2)), 2u);
  EXPECT_EQ(dual_dimension(z_z2, Field::prime(3)), 1u);
  EXPECT_EQ(dual_dimension(AbelianGroup(0, {4}), Field::prime(2)), 1u);
}

TEST(Smith, AgreesWithDeterminantalDivisors) {
  IntMatrix m = IntMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  EXPECT_EQ(cokernel_group(3, m), test_support::determinantal_cokernel(m));
  EXPECT_EQ(cokernel_group(3, m).to_string(), "Z/2 + Z/6 + Z/12");
}
