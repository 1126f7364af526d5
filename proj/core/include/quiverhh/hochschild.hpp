#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "quiverhh/algebra.hpp"
#include "quiverhh/homotopy.hpp"

namespace quiverhh {

/// Linear endomorphism of an algebra; column j is the image of b_j.
class Endomorphism {
 public:
  Endomorphism() = default;
  explicit Endomorphism(std::size_t dim) : cols_(dim) {}
  explicit Endomorphism(std::vector<SparseVec> cols) : cols_(std::move(cols)) {}
  /// Inverse of vectorize.
  static Endomorphism from_vector(const SparseVec& v, std::size_t dim);
  static Endomorphism diagonal(const std::vector<Scalar>& eigenvalues);

  std::size_t dim() const noexcept { return cols_.size(); }
  const SparseVec& column(std::size_t j) const { return cols_.at(j); }
  SparseVec& column(std::size_t j) { return cols_.at(j); }
  const std::vector<SparseVec>& columns() const noexcept { return cols_; }

  SparseVec apply(const Field& k, const SparseVec& x) const;
  bool is_zero() const;
  bool is_diagonal() const;
  /// Coordinates in the order column * dim + row.
  SparseVec vectorize() const;

  friend bool operator==(const Endomorphism&, const Endomorphism&) = default;

 private:
  std::vector<SparseVec> cols_;
};

Endomorphism add(const Field& k, const Endomorphism& f, const Endomorphism& g);
Endomorphism sub(const Field& k, const Endomorphism& f, const Endomorphism& g);
Endomorphism scaled(const Field& k, const Endomorphism& f, const Scalar& c);
/// f after g.
Endomorphism compose(const Field& k, const Endomorphism& f, const Endomorphism& g);
Endomorphism bracket(const Field& k, const Endomorphism& f, const Endomorphism& g);
Endomorphism power(const Field& k, const Endomorphism& f, unsigned long e);
/// [c, -]
Endomorphism inner_derivation(const Algebra& a, const SparseVec& c);

bool satisfies_leibniz(const Algebra& a, const Endomorphism& f);
bool kills_idempotents(const Algebra& a, const Endomorphism& f);

enum class DerivationFlavor { der, der0, inn, inn0 };

struct DerivationSpace {
  DerivationFlavor flavor;
  std::vector<Endomorphism> basis;
};

DerivationSpace derivation_space(const Algebra& a, DerivationFlavor flavor);

class HH1 {
 public:
  /// Keeps a reference to a, which must outlive this object.
  explicit HH1(const Algebra& a);

  const Algebra& algebra() const noexcept { return *algebra_; }
  std::size_t dim() const noexcept { return reps_.size(); }
  std::size_t der0_dim() const noexcept { return der0_.rank(); }
  std::size_t inner_dim() const noexcept { return inn0_.rank(); }
  const std::vector<Endomorphism>& representatives() const noexcept { return reps_; }
  const std::vector<Endomorphism>& der0_basis() const noexcept { return der0_basis_; }
  const std::vector<Endomorphism>& inn0_basis() const noexcept { return inn0_basis_; }

  /// Coset coordinates of a derivation in Der0. Throws InvariantViolation otherwise.
  std::vector<Scalar> coordinates(const Endomorphism& f) const;
  Endomorphism lift(const std::vector<Scalar>& coords) const;
  bool in_der0(const Endomorphism& f) const;
  bool is_inner(const Endomorphism& f) const;
  /// Echelon basis of vectorized Inn0.
  const Echelon& inner_echelon() const noexcept { return inn0_; }

  /// bracket_table()[i][j] = coordinates of [x_i, x_j].
  const std::vector<std::vector<std::vector<Scalar>>>& bracket_table() const;
  std::vector<Scalar> bracket(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const;
  /// Restricted power of a coset; requires positive characteristic.
  std::vector<Scalar> ppower(const std::vector<Scalar>& x) const;
  /// ppower of each basis coset.
  std::vector<std::vector<Scalar>> ppower_table() const;

  /// Dimension of the span of the given derivations modulo Inn0.
  std::size_t rank_modulo_inner(const std::vector<Endomorphism>& fs) const;

 private:
  const Algebra* algebra_;
  std::vector<Endomorphism> der0_basis_;
  std::vector<Endomorphism> inn0_basis_;
  Echelon der0_;
  Echelon inn0_;
  Echelon reps_echelon_;
  std::vector<std::size_t> rep_pivots_;
  std::vector<Endomorphism> reps_;
  mutable std::optional<std::vector<std::vector<std::vector<Scalar>>>> bracket_cache_;
};

/// Checks (x+y)^[p] = x^[p] + y^[p] + sum_i s_i(x, y) on cosets.
bool jacobson_formula_holds(const HH1& h, const std::vector<Scalar>& x, const std::vector<Scalar>& y);

struct Torus {
  std::vector<std::vector<Scalar>> weight_basis;  // arrow weights solving the relation constraints
  std::vector<Endomorphism> derivations;          // diagonal representatives, independent modulo Inn0
  std::vector<std::vector<Scalar>> cosets;        // their HH1 coordinates
  std::size_t dim() const noexcept { return derivations.size(); }
};

/// Diagonal derivation of a path basis: eigenvalue of a path is the sum of its arrow weights.
Endomorphism diagonal_derivation(const Algebra& a, const std::vector<Scalar>& arrow_weights);
/// Same with an additional eigenvalue offset per vertex: b: i -> j gets vertex_offset[i] - vertex_offset[j].
Endomorphism diagonal_derivation(const Algebra& a, const std::vector<Scalar>& arrow_weights,
                                 const std::vector<Scalar>& vertex_offset);

Torus diagonal_torus(const Presentation& p, const RewriteSystem& rs, const HH1& h);

/// Additive character of the fundamental group given by its values on the chord loops
/// of the canonical walk system.
struct Character {
  std::vector<Scalar> chord_values;
  std::vector<Scalar> arrow_weights;  // chord values on chords, 0 on tree arrows

  static Character from_chord_values(const Quiver& q, const Field& k, const std::vector<Scalar>& values);
};

/// Rows: homotopy pairs. Columns: chords of the canonical walk system.
FieldMatrix character_constraints(const Quiver& q, const Field& k, const HomotopyComplex& c);
std::vector<Character> character_space_basis(const Quiver& q, const Field& k, const HomotopyComplex& c);
bool is_character(const Quiver& q, const Field& k, const HomotopyComplex& c, const Character& f);

/// Eigenvalue of f on the closed walk w_i p w_j^-1 for each basis path p: i -> j.
/// Throws InputError when f violates a pair constraint.
Endomorphism theta_derivation(const Algebra& a, const Quiver& q, const WalkSystem& w, const HomotopyComplex& c,
                              const Character& f);
std::vector<Scalar> theta(const HH1& h, const Quiver& q, const WalkSystem& w, const HomotopyComplex& c,
                          const Character& f);
std::size_t theta_image_dimension(const HH1& h, const Quiver& q, const WalkSystem& w, const HomotopyComplex& c);

bool is_toral(const HH1& h, const std::vector<Scalar>& x);
/// Brute force over GF(p)-combinations of the coset basis. Throws BoundExceeded
/// when p^dim exceeds cap and InputError in characteristic 0.
std::optional<std::vector<Scalar>> find_toral(const HH1& h, std::size_t cap = 1000000);

struct NilpotencyReport {
  bool lie_nilpotent = false;
  std::optional<std::size_t> nilpotency_class;
  std::vector<std::size_t> lower_central_series;  // dimensions, starting with dim HH1
  bool p_nilpotent_witnessed = false;             // char p only
  bool toral_search_complete = false;             // char p only
};

NilpotencyReport nilpotency_report(const HH1& h, std::size_t toral_cap = 1000000);

}  // namespace quiverhh
