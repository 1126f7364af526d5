#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "quiverhh/field.hpp"

namespace quiverhh {

/// Sparse vector with entries sorted by index; zero entries are never stored.
class SparseVec {
 public:
  using Entry = std::pair<std::size_t, Scalar>;

  SparseVec() = default;

  static SparseVec unit(std::size_t index) {
    SparseVec v;
    v.entries_.emplace_back(index, Scalar(1));
    return v;
  }
  static SparseVec from_dense(std::span<const Scalar> values);

  bool empty() const noexcept { return entries_.empty(); }
  std::size_t nnz() const noexcept { return entries_.size(); }
  const std::vector<Entry>& entries() const noexcept { return entries_; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  /// Index of the first nonzero entry. Requires !empty().
  std::size_t leading() const { return entries_.front().first; }
  Scalar get(std::size_t index) const;

  /// this += c * x
  void axpy(const Field& k, const Scalar& c, const SparseVec& x);
  SparseVec scaled(const Field& k, const Scalar& c) const;
  /// Appends an entry; indices must be strictly increasing and c nonzero.
  void push_back(std::size_t index, Scalar c) { entries_.emplace_back(index, std::move(c)); }
  /// Adds offset to every index.
  SparseVec shifted(std::size_t offset) const;

  std::vector<Scalar> to_dense(std::size_t size) const;

  friend bool operator==(const SparseVec& a, const SparseVec& b) { return a.entries_ == b.entries_; }

 private:
  std::vector<Entry> entries_;
};

SparseVec add(const Field& k, const SparseVec& a, const SparseVec& b);
SparseVec sub(const Field& k, const SparseVec& a, const SparseVec& b);

/// Incrementally maintained reduced row echelon basis of a subspace.
///
/// Every stored row has a 1 in its pivot column and zeros in all other pivot
/// columns, so reducing a vector needs a single pass over its pivot entries.
class Echelon {
 public:
  Echelon() = default;
  explicit Echelon(Field k) : field_(k) {}

  const Field& field() const noexcept { return field_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  const std::map<std::size_t, SparseVec>& rows() const noexcept { return rows_; }
  std::vector<std::size_t> pivots() const;

  /// x minus its component along the current rows; zero at every pivot column.
  SparseVec reduce(const SparseVec& x) const;
  bool contains(const SparseVec& x) const { return reduce(x).empty(); }
  /// Returns true when x was independent of the current rows.
  bool insert(const SparseVec& x);

 private:
  Field field_;
  std::map<std::size_t, SparseVec> rows_;
};

}  // namespace quiverhh
