#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "quiverhh/field.hpp"

namespace quiverhh {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  mpz_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpz_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& other) const;
  IntMatrix transposed() const;
  bool is_zero() const;
  /// Determinant by fraction-free elimination. Square matrices only.
  mpz_class determinant() const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

struct SmithForm {
  IntMatrix diagonal;       // D = left * m * right
  IntMatrix left;           // U
  IntMatrix right;          // V
  IntMatrix right_inverse;  // V^-1
  std::size_t rank = 0;

  /// Nonzero diagonal entries d_1 | d_2 | ..., all positive.
  std::vector<mpz_class> invariant_factors() const;
};

/// Throws InvariantViolation if the internal identity check U*m*V = D fails.
SmithForm smith_normal_form(const IntMatrix& m);

/// Finitely generated abelian group Z^r + Z/d_1 + ... + Z/d_k with d_1 | ... | d_k, d_i >= 2.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  /// Torsion entries may be in any order; 0 counts as a free summand, units are dropped.
  AbelianGroup(std::size_t free_rank, std::vector<mpz_class> torsion);

  std::size_t free_rank() const noexcept { return free_rank_; }
  const std::vector<mpz_class>& torsion() const noexcept { return torsion_; }
  bool is_trivial() const noexcept { return free_rank_ == 0 && torsion_.empty(); }

  std::string to_string() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  std::size_t free_rank_ = 0;
  std::vector<mpz_class> torsion_;
};

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b);

/// Z^ambient_rank modulo the lattice spanned by the columns of image_columns.
AbelianGroup cokernel_group(std::size_t ambient_rank, const IntMatrix& image_columns);

/// dim_k Hom(g, k^+).
std::size_t dual_dimension(const AbelianGroup& g, const Field& k);

}  // namespace quiverhh
