#include "quiverhh/quiver.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "quiverhh/errors.hpp"

namespace quiverhh {

std::size_t Quiver::add_vertex(const std::string& label) {
  if (vertex_index(label)) throw InputError("duplicate vertex '" + label + "'");
  vertices_.push_back(label);
  return vertices_.size() - 1;
}

std::size_t Quiver::add_arrow(const std::string& label, std::size_t source, std::size_t target) {
  if (arrow_index(label)) throw InputError("duplicate arrow '" + label + "'");
  if (vertex_index(label)) throw InputError("arrow '" + label + "' shadows a vertex");
  if (source >= vertices_.size() || target >= vertices_.size()) {
    throw InputError("arrow '" + label + "' has an endpoint out of range");
  }
  arrows_.push_back(Arrow{label, source, target});
  return arrows_.size() - 1;
}

std::optional<std::size_t> Quiver::vertex_index(const std::string& label) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), label);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::optional<std::size_t> Quiver::arrow_index(const std::string& label) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    if (arrows_[i].label == label) return i;
  }
  return std::nullopt;
}

std::vector<std::size_t> Quiver::component_of_vertex() const {
  std::vector<std::size_t> parent(vertices_.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& a : arrows_) {
    std::size_t x = find(a.source), y = find(a.target);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  }
  std::vector<std::size_t> id(vertices_.size()), root_id(vertices_.size(), SIZE_MAX);
  std::size_t next = 0;
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    std::size_t r = find(v);
    if (root_id[r] == SIZE_MAX) root_id[r] = next++;
    id[v] = root_id[r];
  }
  return id;
}

std::size_t Quiver::num_components() const {
  auto c = component_of_vertex();
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

Path Path::of_arrow(const Quiver& q, std::size_t a) {
  const Arrow& arr = q.arrow(a);
  return Path{arr.source, arr.target, {a}};
}

std::strong_ordering operator<=>(const Path& a, const Path& b) {
  if (auto c = a.arrows.size() <=> b.arrows.size(); c != 0) return c;
  if (auto c = a.arrows <=> b.arrows; c != 0) return c;
  if (auto c = a.source <=> b.source; c != 0) return c;
  return a.target <=> b.target;
}

std::string Path::to_string(const Quiver& q) const {
  if (arrows.empty()) return "e(" + q.vertices().at(source) + ")";
  std::string out;
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    if (i) out += '*';
    out += q.arrow(arrows[i]).label;
  }
  return out;
}

std::optional<Path> compose(const Path& p, const Path& r) {
  if (p.target != r.source) return std::nullopt;
  Path out{p.source, r.target, p.arrows};
  out.arrows.insert(out.arrows.end(), r.arrows.begin(), r.arrows.end());
  return out;
}

std::optional<std::size_t> find_subpath(const Path& p, const Path& r) {
  if (r.is_trivial()) {
    // a trivial path divides p when it sits on p
    if (p.is_trivial()) return p.source == r.source ? std::optional<std::size_t>(0) : std::nullopt;
    return std::nullopt;
  }
  auto it = std::search(p.arrows.begin(), p.arrows.end(), r.arrows.begin(), r.arrows.end());
  if (it == p.arrows.end()) return std::nullopt;
  return static_cast<std::size_t>(it - p.arrows.begin());
}

std::vector<long> arrow_counts(const Quiver& q, const Path& p) {
  std::vector<long> counts(q.num_arrows(), 0);
  for (auto a : p.arrows) ++counts[a];
  return counts;
}

Walk Walk::inverse() const {
  Walk out{end, start, {}};
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) out.steps.push_back(Step{it->arrow, !it->inverse});
  return out;
}

Walk Walk::then(const Walk& next) const {
  if (end != next.start) throw std::invalid_argument("walks do not meet");
  Walk out{start, next.end, steps};
  out.steps.insert(out.steps.end(), next.steps.begin(), next.steps.end());
  return out;
}

Walk Walk::then(const Quiver& q, Step s) const {
  const Arrow& a = q.arrow(s.arrow);
  std::size_t from = s.inverse ? a.target : a.source;
  std::size_t to = s.inverse ? a.source : a.target;
  if (from != end) throw std::invalid_argument("step does not start at the end of the walk");
  Walk out{start, to, steps};
  out.steps.push_back(s);
  return out;
}

std::vector<long> Walk::arrow_counts(const Quiver& q) const {
  std::vector<long> counts(q.num_arrows(), 0);
  for (const auto& s : steps) counts[s.arrow] += s.inverse ? -1 : 1;
  return counts;
}

std::string Walk::to_string(const Quiver& q) const {
  if (steps.empty()) return "e(" + q.vertices().at(start) + ")";
  std::string out;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (i) out += '*';
    out += q.arrow(steps[i].arrow).label;
    if (steps[i].inverse) out += "^-1";
  }
  return out;
}

std::size_t betti_number(const Quiver& q) {
  return q.num_arrows() + q.num_components() - q.num_vertices();
}

WalkSystem spanning_walk_system(const Quiver& q) {
  std::vector<std::size_t> order(q.num_arrows());
  std::iota(order.begin(), order.end(), 0);
  return spanning_walk_system(q, order);
}

WalkSystem spanning_walk_system(const Quiver& q, const std::vector<std::size_t>& arrow_priority) {
  const std::size_t n = q.num_vertices();
  if (arrow_priority.size() != q.num_arrows()) throw std::invalid_argument("arrow priority has wrong size");
  WalkSystem w;
  w.walks.assign(n, Walk{});
  w.tree_arrow.assign(q.num_arrows(), false);
  std::vector<bool> seen(n, false);
  for (std::size_t root = 0; root < n; ++root) {
    if (seen[root]) continue;
    w.base.push_back(root);
    seen[root] = true;
    w.walks[root] = Walk::trivial(root);
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop_front();
      for (auto a : arrow_priority) {
        const Arrow& arr = q.arrow(a);
        if (arr.source == arr.target) continue;
        std::optional<Step> step;
        std::size_t other = 0;
        if (arr.source == v && !seen[arr.target]) {
          step = Step{a, false};
          other = arr.target;
        } else if (arr.target == v && !seen[arr.source]) {
          step = Step{a, true};
          other = arr.source;
        }
        if (!step) continue;
        seen[other] = true;
        w.tree_arrow[a] = true;
        w.walks[other] = w.walks[v].then(q, *step);
        queue.push_back(other);
      }
    }
  }
  return w;
}

std::vector<std::size_t> chord_arrows(const Quiver& q, const WalkSystem& w) {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    if (!w.tree_arrow[a]) out.push_back(a);
  }
  return out;
}

std::vector<Walk> chord_loops(const Quiver& q, const WalkSystem& w) {
  std::vector<Walk> out;
  for (auto a : chord_arrows(q, w)) {
    const Arrow& arr = q.arrow(a);
    out.push_back(w.walks[arr.source].then(q, Step{a, false}).then(w.walks[arr.target].inverse()));
  }
  return out;
}

}  // namespace quiverhh
