#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "quiverhh/algebra.hpp"
#include "quiverhh/matrix.hpp"
#include "quiverhh/smith.hpp"

namespace quiverhh {

struct ParallelClass {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<Path> paths;  // sorted, distinct
};

/// Classes of irreducible paths, paths occurring in generating relations and
/// paths occurring in rewrite rules, grouped by endpoints.
std::vector<ParallelClass> parallel_classes(const Presentation& p, const RewriteSystem& rs);

struct RelationSubspace {
  ParallelClass cls;
  FieldMatrix evaluation;  // column j = normal form of cls.paths[j] in the algebra basis
  FieldMatrix basis;       // rows: reduced echelon basis of the kernel of evaluation
  std::size_t dim() const noexcept { return basis.rows(); }
};

RelationSubspace relation_subspace(const Algebra& a, const RewriteSystem& rs, const ParallelClass& cls);

struct CircuitSet {
  std::vector<std::vector<std::size_t>> circuits;    // sorted index sets, sorted lexicographically
  std::vector<std::vector<std::size_t>> components;  // connected components of size >= 2
};

/// Minimal supports of nonzero relation vectors. Throws BoundExceeded with
/// "support cap exceeded" when a component needs candidate supports larger than support_cap.
CircuitSet enumerate_circuits(const RelationSubspace& r, std::size_t support_cap = 12);
/// Same, for the column matroid of any matrix.
CircuitSet enumerate_circuits(const FieldMatrix& columns, std::size_t support_cap = 12);

using PathPair = std::pair<Path, Path>;

/// Spanning-forest pairs of the circuit components, one list entry per class.
std::vector<PathPair> homotopy_pairs(const std::vector<RelationSubspace>& subspaces,
                                     const std::vector<CircuitSet>& circuits);

struct HomotopyComplex {
  IntMatrix delta0;  // vertices x arrows, column a = source(a) - target(a)
  IntMatrix delta1;  // arrows x pairs, column = counts(p) - counts(q)
  std::vector<PathPair> pairs;
};

HomotopyComplex build_complex(const Quiver& q, const std::vector<PathPair>& pairs);

struct HomotopyResult {
  AbelianGroup pi1_ab;
  std::vector<AbelianGroup> per_component;
  std::size_t dual_dim = 0;
};

/// Per component: the kernel lattice of delta0 modulo the image of delta1.
HomotopyResult pi1_abelianization(const Quiver& q, const HomotopyComplex& c, const Field& k);

enum class Semimonomial { monomial, semimonomial, p_semimonomial, none };
std::string to_string(Semimonomial s, const Field& k);

Semimonomial semimonomial_check(const Quiver& q, const Field& k, const std::vector<RelationSubspace>& subspaces,
                                const std::vector<CircuitSet>& circuits);

struct HomotopyAnalysis {
  std::vector<RelationSubspace> subspaces;  // classes with a nonzero relation subspace
  std::vector<CircuitSet> circuits;
  HomotopyComplex complex;
  HomotopyResult result;
  Semimonomial status = Semimonomial::monomial;
};

HomotopyAnalysis analyze_homotopy(const Presentation& p, const RewriteSystem& rs, const Algebra& a,
                                  std::size_t support_cap = 12);

}  // namespace quiverhh
