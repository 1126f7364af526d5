#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quiverhh/dsl.hpp"
#include "quiverhh/rewriting.hpp"
#include "quiverhh/sparse.hpp"

namespace quiverhh {

/// Finite dimensional algebra on a fixed basis b_0..b_{dim-1} with structure
/// constants b_i * b_j = table[i][j].
class Algebra {
 public:
  Algebra(Field k, std::vector<std::string> labels, std::vector<std::size_t> idempotents,
          std::vector<std::vector<SparseVec>> table, std::vector<Path> paths = {});

  const Field& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<std::size_t>& idempotents() const noexcept { return idempotents_; }
  /// Basis paths when the algebra was built from a presentation, else empty.
  const std::vector<Path>& paths() const noexcept { return paths_; }
  bool has_paths() const noexcept { return !paths_.empty(); }

  const SparseVec& product(std::size_t i, std::size_t j) const { return table_[i][j]; }
  SparseVec multiply(const SparseVec& x, const SparseVec& y) const;
  SparseVec unit() const;

  std::optional<std::size_t> index_of(const Path& p) const;
  /// Coordinates of a combination of basis paths. Throws if a path is not in the basis.
  SparseVec embed(const Element& x) const;

  std::string format(const SparseVec& x) const;

 private:
  Field field_;
  std::vector<std::string> labels_;
  std::vector<std::size_t> idempotents_;
  std::vector<std::vector<SparseVec>> table_;
  std::vector<Path> paths_;
  std::map<Path, std::size_t> path_index_;
};

struct BuildOptions {
  std::size_t full_associativity_cap = 64;
  std::size_t random_triples = 1000;
};

/// Basis = irreducible paths. The result is certified: associativity, the
/// generating relations vanish, every basis path is the product of its arrows,
/// and the idempotents sum to the unit. A failed certificate means the degree
/// bound was too small and raises BoundExceeded.
Algebra build_algebra(const Presentation& p, const RewriteSystem& rs, const BuildOptions& options = {});
Algebra build_algebra(const Presentation& p, const BuildOptions& options = {});

/// Images of the vertices and arrows of a quiver inside an algebra.
struct QuiverImages {
  std::vector<SparseVec> vertices;
  std::vector<SparseVec> arrows;
};

/// The canonical images e_v and nf(alpha) in an algebra built from a presentation on q.
QuiverImages canonical_images(const Algebra& a, const RewriteSystem& rs);
/// Evaluates a kQ element in the algebra by multiplying images.
SparseVec evaluate(const Algebra& a, const QuiverImages& images, const Element& x);

/// Throws InputError on malformed text, a non-associative table or failing idempotent axioms.
Algebra ingest_structure_constants(std::string_view text);
Algebra load_structure_constants(const std::string& path);

/// Returns a triple (i, j, l) with (b_i b_j) b_l != b_i (b_j b_l), if any.
std::optional<std::array<std::size_t, 3>> associativity_defect(const Algebra& a, const BuildOptions& options = {});

/// Span of the subalgebra generated by the given vectors (closed under products).
Echelon generated_subspace(const Algebra& a, const std::vector<SparseVec>& generators);

struct MinimalityResult {
  bool minimal = true;
  std::optional<std::size_t> redundant_arrow;
};

/// Tests arrows from the last declared to the first; the witness is the first
/// arrow whose omission still generates the algebra.
MinimalityResult minimality_check(const Presentation& p, const Algebra& a);
MinimalityResult minimality_check(const RewriteSystem& rs, const Algebra& a);

/// Sum over vertices of dim e_i A e_i.
std::size_t cartan_trace(const Algebra& a);

}  // namespace quiverhh
