#include "quiverhh/sparse.hpp"

#include <algorithm>

namespace quiverhh {

SparseVec SparseVec::from_dense(std::span<const Scalar> values) {
  SparseVec v;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!Field::is_zero(values[i])) v.entries_.emplace_back(i, values[i]);
  }
  return v;
}

Scalar SparseVec::get(std::size_t index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, std::size_t i) { return e.first < i; });
  if (it != entries_.end() && it->first == index) return it->second;
  return Scalar(0);
}

void SparseVec::axpy(const Field& k, const Scalar& c, const SparseVec& x) {
  if (Field::is_zero(c) || x.empty()) return;
  std::vector<Entry> out;
  out.reserve(entries_.size() + x.entries_.size());
  auto a = entries_.begin();
  auto b = x.entries_.begin();
  while (a != entries_.end() || b != x.entries_.end()) {
    if (b == x.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      out.push_back(std::move(*a));
      ++a;
    } else if (a == entries_.end() || b->first < a->first) {
      Scalar s = k.mul(c, b->second);
      if (!Field::is_zero(s)) out.emplace_back(b->first, std::move(s));
      ++b;
    } else {
      Scalar s = k.add(a->second, k.mul(c, b->second));
      if (!Field::is_zero(s)) out.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  entries_ = std::move(out);
}

SparseVec SparseVec::scaled(const Field& k, const Scalar& c) const {
  SparseVec v;
  if (Field::is_zero(c)) return v;
  v.entries_.reserve(entries_.size());
  for (const auto& [i, x] : entries_) v.entries_.emplace_back(i, k.mul(c, x));
  return v;
}

SparseVec SparseVec::shifted(std::size_t offset) const {
  SparseVec v = *this;
  for (auto& e : v.entries_) e.first += offset;
  return v;
}

std::vector<Scalar> SparseVec::to_dense(std::size_t size) const {
  std::vector<Scalar> out(size);
  for (const auto& [i, x] : entries_) {
    if (i < size) out[i] = x;
  }
  return out;
}

SparseVec add(const Field& k, const SparseVec& a, const SparseVec& b) {
  SparseVec r = a;
  r.axpy(k, Scalar(1), b);
  return r;
}

SparseVec sub(const Field& k, const SparseVec& a, const SparseVec& b) {
  SparseVec r = a;
  r.axpy(k, k.make(-1), b);
  return r;
}

std::vector<std::size_t> Echelon::pivots() const {
  std::vector<std::size_t> out;
  out.reserve(rows_.size());
  for (const auto& [c, row] : rows_) out.push_back(c);
  return out;
}

SparseVec Echelon::reduce(const SparseVec& x) const {
  SparseVec r = x;
  for (const auto& [c, value] : x) {
    auto it = rows_.find(c);
    if (it != rows_.end()) r.axpy(field_, field_.neg(value), it->second);
  }
  return r;
}

bool Echelon::insert(const SparseVec& x) {
  SparseVec r = reduce(x);
  if (r.empty()) return false;
  std::size_t pivot = r.leading();
  if (!Field::is_one(r.entries().front().second)) {
    r = r.scaled(field_, field_.inv(r.entries().front().second));
  }
  for (auto& [c, row] : rows_) {
    Scalar v = row.get(pivot);
    if (!Field::is_zero(v)) row.axpy(field_, field_.neg(v), r);
  }
  rows_.emplace(pivot, std::move(r));
  return true;
}

}  // namespace quiverhh
