#include "quiverhh/path_algebra.hpp"

#include <algorithm>

namespace quiverhh {

Element Element::of(const Path& p, const Scalar& c) {
  Element e;
  if (!Field::is_zero(c)) e.terms_.emplace(p, c);
  return e;
}

Element Element::scalar(const Quiver& q, const Field& k, const Scalar& c) {
  Element e;
  for (std::size_t v = 0; v < q.num_vertices(); ++v) e.add_term(k, Path::trivial(v), c);
  return e;
}

Scalar Element::coefficient(const Path& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Scalar(0) : it->second;
}

std::size_t Element::degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.length();
}

void Element::add_term(const Field& k, const Path& p, const Scalar& c) {
  if (Field::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (inserted) return;
  it->second = k.add(it->second, c);
  if (Field::is_zero(it->second)) terms_.erase(it);
}

void Element::axpy(const Field& k, const Scalar& c, const Element& x) {
  if (Field::is_zero(c)) return;
  for (const auto& [p, v] : x.terms_) add_term(k, p, k.mul(c, v));
}

Element Element::scaled(const Field& k, const Scalar& c) const {
  Element out;
  out.axpy(k, c, *this);
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> Element::endpoints() const {
  if (terms_.empty()) return std::nullopt;
  auto s = terms_.begin()->first.source;
  auto t = terms_.begin()->first.target;
  for (const auto& [p, c] : terms_) {
    if (p.source != s || p.target != t) return std::nullopt;
  }
  return std::make_pair(s, t);
}

std::string Element::to_string(const Quiver& q) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    std::string c = quiverhh::to_string(it->second);
    bool negative = !c.empty() && c[0] == '-';
    if (negative) c.erase(0, 1);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (c != "1") out += c + "*";
    out += it->first.to_string(q);
    first = false;
  }
  return out;
}

Element multiply(const Field& k, const Element& a, const Element& b) {
  Element out;
  for (const auto& [p, c] : a.terms()) {
    for (const auto& [r, d] : b.terms()) {
      if (auto pr = compose(p, r)) out.add_term(k, *pr, k.mul(c, d));
    }
  }
  return out;
}

Element sandwich(const Field& k, const Path& left, const Element& x, const Path& right) {
  Element out;
  for (const auto& [p, c] : x.terms()) {
    auto lp = compose(left, p);
    if (!lp) continue;
    if (auto lpr = compose(*lp, right)) out.add_term(k, *lpr, c);
  }
  return out;
}

}  // namespace quiverhh
