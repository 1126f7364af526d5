#pragma once

#include <cstddef>
#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace quiverhh {

struct Arrow {
  std::string label;
  std::size_t source;
  std::size_t target;
};

class Quiver {
 public:
  /// Throws InputError on a duplicate label.
  std::size_t add_vertex(const std::string& label);
  /// Throws InputError on a duplicate label or an out of range endpoint.
  std::size_t add_arrow(const std::string& label, std::size_t source, std::size_t target);

  std::size_t num_vertices() const noexcept { return vertices_.size(); }
  std::size_t num_arrows() const noexcept { return arrows_.size(); }
  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  const Arrow& arrow(std::size_t i) const { return arrows_.at(i); }

  std::optional<std::size_t> vertex_index(const std::string& label) const;
  std::optional<std::size_t> arrow_index(const std::string& label) const;

  /// Component id per vertex; ids are numbered by lowest vertex.
  std::vector<std::size_t> component_of_vertex() const;
  std::size_t num_components() const;

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

/// A path composed left to right: arrows[0] is traversed first.
struct Path {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<std::size_t> arrows;

  static Path trivial(std::size_t v) { return Path{v, v, {}}; }
  static Path of_arrow(const Quiver& q, std::size_t a);

  std::size_t length() const noexcept { return arrows.size(); }
  bool is_trivial() const noexcept { return arrows.empty(); }

  /// Degree-lexicographic: length first, then arrow indices from the left.
  friend std::strong_ordering operator<=>(const Path& a, const Path& b);
  friend bool operator==(const Path&, const Path&) = default;

  std::string to_string(const Quiver& q) const;
};

/// p followed by r, or nullopt when target(p) != source(r).
std::optional<Path> compose(const Path& p, const Path& r);
/// Position of r as a subpath of p, if any.
std::optional<std::size_t> find_subpath(const Path& p, const Path& r);
/// Signed multiplicity of each arrow.
std::vector<long> arrow_counts(const Quiver& q, const Path& p);

struct Step {
  std::size_t arrow;
  bool inverse;
  friend bool operator==(const Step&, const Step&) = default;
};

struct Walk {
  std::size_t start = 0;
  std::size_t end = 0;
  std::vector<Step> steps;

  static Walk trivial(std::size_t v) { return Walk{v, v, {}}; }
  Walk inverse() const;
  /// Throws std::invalid_argument when the walks do not meet.
  Walk then(const Walk& next) const;
  Walk then(const Quiver& q, Step s) const;
  bool is_closed() const noexcept { return start == end; }
  std::vector<long> arrow_counts(const Quiver& q) const;
  std::string to_string(const Quiver& q) const;

  friend bool operator==(const Walk&, const Walk&) = default;
};

struct WalkSystem {
  std::vector<std::size_t> base;  // per component
  std::vector<Walk> walks;        // per vertex, from its base
  std::vector<bool> tree_arrow;   // per arrow
};

std::size_t betti_number(const Quiver& q);

WalkSystem spanning_walk_system(const Quiver& q);
/// BFS spanning forest where arrow_priority lists the arrows in tie-break order.
WalkSystem spanning_walk_system(const Quiver& q, const std::vector<std::size_t>& arrow_priority);

/// Non-tree arrows in declaration order.
std::vector<std::size_t> chord_arrows(const Quiver& q, const WalkSystem& w);
/// One closed walk w_i, alpha, w_j^-1 per chord alpha: i -> j.
std::vector<Walk> chord_loops(const Quiver& q, const WalkSystem& w);

}  // namespace quiverhh
