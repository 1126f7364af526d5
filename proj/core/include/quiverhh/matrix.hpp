#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "quiverhh/field.hpp"

namespace quiverhh {

/// Dense matrix with exact entries in a Field.
class FieldMatrix {
 public:
  FieldMatrix() = default;
  FieldMatrix(Field k, std::size_t rows, std::size_t cols);

  static FieldMatrix identity(Field k, std::size_t n);
  /// Entries are mapped into k (integers and fractions are reduced mod p).
  static FieldMatrix from_rows(Field k, const std::vector<std::vector<Scalar>>& rows);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Scalar> row(std::size_t r) const;
  std::vector<Scalar> column(std::size_t c) const;
  std::vector<Scalar> apply(const std::vector<Scalar>& x) const;

  FieldMatrix operator*(const FieldMatrix& other) const;
  friend bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct RowReduction {
  FieldMatrix reduced;
  std::vector<std::size_t> pivots;  // strictly increasing pivot columns
};

RowReduction row_reduce(FieldMatrix m);
std::size_t rank(const FieldMatrix& m);

/// Basis of the right null space, one vector per free column. Each vector is
/// scaled so that its first nonzero entry is 1.
std::vector<std::vector<Scalar>> kernel_basis(const FieldMatrix& m);

std::optional<FieldMatrix> inverse(const FieldMatrix& m);

}  // namespace quiverhh
