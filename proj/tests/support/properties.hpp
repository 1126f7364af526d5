#pragma once

#include <cstddef>
#include <string>

namespace quiverhh::test_support {

struct PropertyResult {
  std::size_t cases = 0;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0; }
};

// Each suite runs over `cases` random presentations (seeded by index) or,
// for Smith forms, random integer matrices.
PropertyResult leibniz_property(std::size_t cases);
PropertyResult lie_table_property(std::size_t cases);
PropertyResult smith_property(std::size_t cases);
PropertyResult theta_tree_property(std::size_t cases);
PropertyResult circuit_oracle_property(std::size_t cases);
PropertyResult pi1_oracle_property(std::size_t cases);
PropertyResult dual_bound_property(std::size_t cases);

}  // namespace quiverhh::test_support
