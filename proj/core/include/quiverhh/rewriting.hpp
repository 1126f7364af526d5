#pragma once

#include <cstddef>
#include <vector>

#include "quiverhh/dsl.hpp"
#include "quiverhh/path_algebra.hpp"

namespace quiverhh {

/// lead -> tail, every path of tail strictly below lead.
struct Rule {
  Path lead;
  Element tail;
};

class RewriteSystem {
 public:
  RewriteSystem(Quiver q, Field k, std::size_t degree_bound, std::vector<Rule> rules,
                std::size_t discarded_pairs = 0);

  const Quiver& quiver() const noexcept { return quiver_; }
  const Field& field() const noexcept { return field_; }
  std::size_t degree_bound() const noexcept { return bound_; }
  const std::vector<Rule>& rules() const noexcept { return rules_; }
  /// Critical pairs skipped because their overlap is longer than the bound.
  std::size_t discarded_pairs() const noexcept { return discarded_; }

  bool is_irreducible(const Path& p) const;
  /// Throws BoundExceeded when x contains a path longer than the degree bound.
  Element normal_form(const Element& x) const;
  Element normal_form(const Path& p) const { return normal_form(Element::of(p)); }
  /// Rewrites without the length check. Results beyond the bound are sound
  /// modulo I but not guaranteed unique.
  Element reduce_unbounded(const Element& x) const;

  /// All irreducible paths, sorted. Throws BoundExceeded with
  /// "not finite dimensional at bound D" when one is longer than the bound.
  std::vector<Path> irreducible_paths() const;

 private:
  const Rule* matching_rule(const Path& p, std::size_t& position) const;

  Quiver quiver_;
  Field field_;
  std::size_t bound_;
  std::vector<Rule> rules_;
  std::size_t discarded_;
};

struct CompletionOptions {
  std::size_t rule_budget = 20000;
};

/// Critical-pair completion under the degree-lexicographic order, discarding
/// overlaps longer than the presentation's degree bound.
RewriteSystem complete_rewriting(const Presentation& p, const CompletionOptions& options = {});

}  // namespace quiverhh
