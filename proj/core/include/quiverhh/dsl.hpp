#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quiverhh/field.hpp"
#include "quiverhh/path_algebra.hpp"
#include "quiverhh/quiver.hpp"

namespace quiverhh {

/// Image of one arrow under an isomorphism onto a reference presentation;
/// the expression is resolved against the reference quiver later.
struct ArrowMap {
  std::string arrow;
  std::string expression;
  std::size_t line = 0;
  std::size_t column = 0;
};

struct Presentation {
  std::string name;
  Quiver quiver;
  Field field;
  std::vector<Element> relations;
  std::size_t degree_bound = 0;
  std::vector<ArrowMap> maps;

  std::size_t max_relation_length() const;
};

struct ParseOptions {
  std::optional<Field> field_override;
  std::optional<std::size_t> degree_bound;
};

/// Throws ParseError for syntax errors and InputError for semantic ones
/// (unknown names, non-parallel relations, coefficients outside the field).
Presentation parse_presentation(std::string_view text, const ParseOptions& options = {});
Presentation load_presentation(const std::string& path, const ParseOptions& options = {});

/// Parses one kQ expression over q, e.g. "2*a*b - 1/3*e(v)".
Element parse_element(std::string_view text, const Quiver& q, const Field& k);

/// Default degree bound: twice the longest relation, and at least the longest
/// path when the quiver has no oriented cycle.
std::size_t default_degree_bound(const Quiver& q, std::size_t max_relation_length);
/// Length of the longest path, or nullopt when the quiver has an oriented cycle.
std::optional<std::size_t> longest_path_length(const Quiver& q);

}  // namespace quiverhh
