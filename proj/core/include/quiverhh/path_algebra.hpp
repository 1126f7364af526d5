#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "quiverhh/field.hpp"
#include "quiverhh/quiver.hpp"

namespace quiverhh {

/// Element of the path algebra kQ: a finite combination of paths.
class Element {
 public:
  Element() = default;
  static Element of(const Path& p, const Scalar& c = 1);
  /// c times the identity, i.e. c * sum of e_v.
  static Element scalar(const Quiver& q, const Field& k, const Scalar& c);

  bool is_zero() const noexcept { return terms_.empty(); }
  const std::map<Path, Scalar>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  /// Largest path in the degree-lexicographic order. Requires !is_zero().
  const Path& leading_path() const { return terms_.rbegin()->first; }
  const Scalar& leading_coefficient() const { return terms_.rbegin()->second; }
  Scalar coefficient(const Path& p) const;
  std::size_t degree() const;

  void add_term(const Field& k, const Path& p, const Scalar& c);
  /// this += c * x
  void axpy(const Field& k, const Scalar& c, const Element& x);
  Element scaled(const Field& k, const Scalar& c) const;

  /// Common endpoints of every term, or nullopt when the element is not parallel.
  std::optional<std::pair<std::size_t, std::size_t>> endpoints() const;

  std::string to_string(const Quiver& q) const;

  friend bool operator==(const Element&, const Element&) = default;

 private:
  std::map<Path, Scalar> terms_;
};

Element multiply(const Field& k, const Element& a, const Element& b);
/// left * x * right
Element sandwich(const Field& k, const Path& left, const Element& x, const Path& right);

}  // namespace quiverhh
