#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "support/random_presentation.hpp"

using namespace quiverhh;

TEST(OracleSelf, DeterminantalDivisors) {
  EXPECT_EQ(test_support::determinantal_cokernel(IntMatrix::from_rows({{2}, {2}})).to_string(), "Z + Z/2");
  EXPECT_EQ(test_support::determinantal_cokernel(IntMatrix::from_rows({{2, 0}, {0, 3}})).to_string(), "Z/6");
  EXPECT_EQ(test_support::determinantal_cokernel(IntMatrix(3, 0)).to_string(), "Z^3");
  EXPECT_EQ(test_support::determinantal_cokernel(IntMatrix::from_rows({{0, 0}})).to_string(), "Z");
}

TEST(OracleSelf, BruteForceCircuits) {
  Field q = Field::rationals();
  auto c = test_support::brute_force_circuits(FieldMatrix::from_rows(q, {{1, 1, 0, 0}, {0, 0, 1, 0}}));
  EXPECT_EQ(c, (std::vector<std::vector<std::size_t>>{{0, 1}, {3}}));
  EXPECT_EQ(test_support::circuit_components(c, 4), (std::vector<std::vector<std::size_t>>{{0, 1}}));
}

TEST(OracleSelf, GeneratorIsDeterministicAndParses) {
  std::mt19937_64 a(7), b(7);
  for (int i = 0; i < 20; ++i) {
    std::string ta = test_support::random_presentation_text(a);
    EXPECT_EQ(ta, test_support::random_presentation_text(b));
    EXPECT_NO_THROW(parse_presentation(ta)) << ta;
  }
}
