#pragma once

#include <cstddef>
#include <vector>

#include "quiverhh/algebra.hpp"
#include "quiverhh/homotopy.hpp"
#include "quiverhh/matrix.hpp"
#include "quiverhh/smith.hpp"

namespace quiverhh::test_support {

// Every subset of columns checked directly: S is a circuit when S is
// dependent and each S minus one element is independent. At most 12 columns.
std::vector<std::vector<std::size_t>> brute_force_circuits(const FieldMatrix& columns);
// Elements linked by a common circuit, closed transitively; only groups of size >= 2.
std::vector<std::vector<std::size_t>> circuit_components(const std::vector<std::vector<std::size_t>>& circuits,
                                                         std::size_t n);

// Z^rows modulo the column lattice, through gcds of k x k minors.
AbelianGroup determinantal_cokernel(const IntMatrix& columns);

struct MinimalRelationOracle {
  std::vector<std::pair<Path, Path>> identified;  // every pair of paths in a common minimal relation
  AbelianGroup pi1_ab;
  std::size_t dual_dim = 0;
};

// Homotopy relation from scratch: all paths up to the degree bound (stopping
// early once a whole length vanishes), minimal supports by subset search,
// the group presented on the arrows with the arrows of an independent
// spanning forest set to zero.
MinimalRelationOracle minimal_relation_oracle(const RewriteSystem& rs, const Algebra& a);

}  // namespace quiverhh::test_support
