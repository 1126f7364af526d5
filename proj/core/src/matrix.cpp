#include "quiverhh/matrix.hpp"

#include <stdexcept>

namespace quiverhh {

FieldMatrix::FieldMatrix(Field k, std::size_t rows, std::size_t cols)
    : field_(k), rows_(rows), cols_(cols), data_(rows * cols) {}

FieldMatrix FieldMatrix::identity(Field k, std::size_t n) {
  FieldMatrix m(k, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

FieldMatrix FieldMatrix::from_rows(Field k, const std::vector<std::vector<Scalar>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  FieldMatrix m(k, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = k.make(rows[r][c]);
  }
  return m;
}

std::vector<Scalar> FieldMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

std::vector<Scalar> FieldMatrix::column(std::size_t c) const {
  std::vector<Scalar> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

std::vector<Scalar> FieldMatrix::apply(const std::vector<Scalar>& x) const {
  if (x.size() != cols_) throw std::invalid_argument("dimension mismatch in apply");
  std::vector<Scalar> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Scalar acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!Field::is_zero(x[c])) acc = field_.add(acc, field_.mul((*this)(r, c), x[c]));
    }
    out[r] = acc;
  }
  return out;
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("dimension mismatch in product");
  FieldMatrix out(field_, rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (Field::is_zero(a)) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        const Scalar& b = other(k, j);
        if (!Field::is_zero(b)) out(i, j) = field_.add(out(i, j), field_.mul(a, b));
      }
    }
  }
  return out;
}

RowReduction row_reduce(FieldMatrix m) {
  const Field k = m.field();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && Field::is_zero(m(sel, col))) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    }
    Scalar inv = k.inv(m(row, col));
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = k.mul(m(row, c), inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || Field::is_zero(m(r, col))) continue;
      Scalar f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!Field::is_zero(m(row, c))) m(r, c) = k.sub(m(r, c), k.mul(f, m(row, c)));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const FieldMatrix& m) { return row_reduce(m).pivots.size(); }

std::vector<std::vector<Scalar>> kernel_basis(const FieldMatrix& m) {
  const Field k = m.field();
  auto [r, pivots] = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = k.neg(r(i, free));
    for (const auto& x : v) {
      if (Field::is_zero(x)) continue;
      if (!Field::is_one(x)) {
        Scalar s = k.inv(x);
        for (auto& y : v) y = k.mul(y, s);
      }
      break;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<FieldMatrix> inverse(const FieldMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  FieldMatrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto [r, pivots] = row_reduce(std::move(aug));
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  FieldMatrix out(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = r(i, n + j);
  }
  return out;
}

}  // namespace quiverhh
